// Acceptance run: one PASS/FAIL line per criterion. argv[1] is the vnlring
// executable used for the determinism check.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "vnl/harness/report.hpp"

using namespace vnl;
using namespace vnl::harness;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failed = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << detail << std::endl;
  if (!ok) ++failed;
}

bool brute_regular(const FiniteRing& R, Index a) {
  for (Index x = 0; x < R.order(); ++x)
    if (R.mul3(a, x, a) == a) return true;
  return false;
}

bool brute_unimodular3(const FiniteRing& R, Index a, Index b, Index c) {
  const Index n = R.order();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index partial = R.add(R.mul(a, x), R.mul(b, y));
      for (Index z = 0; z < n; ++z)
        if (R.add(partial, R.mul(c, z)) == R.one()) return true;
    }
  return false;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

std::string strip_wall_time(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.find("wall_time_ms") == std::string::npos) out += line + "\n";
  return out;
}

template <class F>
void guarded(int id, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    verdict(id, false, std::string("exception: ") + e.what());
  }
}

const CorpusEntry* find_entry(const Corpus& c, const std::string& expr) {
  for (const auto& e : c.entries)
    if (e.expr == expr) return &e;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-vnlring>\n";
    return 2;
  }
  const std::string cli = argv[1];

  auto start = Clock::now();
  Elaborator quick_elab, full_elab;
  const Corpus quick = generate_corpus(Profile::Quick, 0, quick_elab);
  const Corpus full = generate_corpus(Profile::Full, 0, full_elab);
  std::cout << "corpora: quick=" << quick.entries.size() << " full=" << full.entries.size() << " built in "
            << seconds_since(start) << "s" << std::endl;

  guarded(1, [] {
    const auto t0 = Clock::now();
    int disagreements = 0;
    for (Index n = 1; n <= 200; ++n)
      if (zn_vnl_criterion(n) != is_vnl(build_cyclic(n, analysis_config())).holds) ++disagreements;
    const double s = seconds_since(t0);
    verdict(1, disagreements == 0 && s < 10,
            "n<=200 disagreements=" + std::to_string(disagreements) + " time=" + std::to_string(s) + "s");
  });

  guarded(2, [] {
    const FiniteRing F2 = build_cyclic(2), F3 = build_cyclic(3);
    const std::array<std::pair<Index, const FiniteRing*>, 5> cases{
        {{2, &F2}, {3, &F2}, {4, &F2}, {2, &F3}, {3, &F3}}};
    const std::array<bool, 5> expected{true, true, false, true, true};
    bool ok = true;
    std::string detail;
    double t4 = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      const auto t0 = Clock::now();
      const auto T = build_upper_triangular(cases[i].first, *cases[i].second);
      const bool got = is_vnl(T.ring).holds;
      if (cases[i].first == 4) t4 = seconds_since(t0);
      ok = ok && got == expected[i];
      detail += T.ring.label() + "=" + (got ? "vnl " : "not-vnl ");
    }
    const bool z4 = is_vnl(build_upper_triangular(2, build_cyclic(4)).ring).holds;
    ok = ok && !z4 && t4 < 60;
    verdict(2, ok, detail + "T2(Z4)=" + (z4 ? "vnl" : "not-vnl") + " T4(F2) time=" + std::to_string(t4) + "s");
  });

  guarded(3, [&] {
    std::size_t rings = 0, elements = 0, disagreements = 0;
    for (const auto& e : quick.entries) {
      if (!e.built->tri || e.ring().order() > 256) continue;
      ++rings;
      const auto& T = *e.built->tri;
      for (Index a = 0; a < T.ring().order(); ++a, ++elements) {
        bool fast;
        try {
          fast = regular_via_prop28(T, T.decode(a)).has_value();
        } catch (const InternalInconsistency&) {
          ++disagreements;
          continue;
        }
        if (fast != brute_regular(T.ring(), a)) ++disagreements;
      }
    }
    verdict(3, rings > 0 && disagreements == 0,
            "rings=" + std::to_string(rings) + " elements=" + std::to_string(elements) +
                " disagreements=" + std::to_string(disagreements));
  });

  guarded(4, [&] {
    std::size_t rings = 0, disagreements = 0;
    for (const auto& e : full.entries) {
      if (!e.built->tri || !e.analyzable()) continue;
      ++rings;
      const auto& T = *e.built->tri;
      try {
        if (vnl_via_thm212(T.left_ring(), T.module(), T.right_ring()).holds != is_vnl(T.ring()).holds)
          ++disagreements;
      } catch (const InternalInconsistency&) {
        ++disagreements;
      }
    }
    const auto* negative = find_entry(full, "Tri(M(2,GF(2)),self,M(2,GF(2)))");
    const auto* positive = find_entry(full, "Tri(Zn(6),ideal:3,Zn(6))");
    const bool anchors = negative && positive && !is_vnl(negative->ring()).holds && is_vnl(positive->ring()).holds;
    verdict(4, rings > 0 && disagreements == 0 && anchors,
            "triangular rings=" + std::to_string(rings) + " disagreements=" + std::to_string(disagreements) +
                " simple-over-self negative and ideal positive instances " + (anchors ? "present" : "missing"));
  });

  guarded(5, [&] {
    std::size_t rings = 0, disagreements = 0;
    std::string first;
    for (const auto& e : full.entries) {
      if (!e.analyzable() || !ring_is_abelian(e.ring())) continue;
      ++rings;
      const FiniteRing& R = e.ring();
      bool agree;
      try {
        const bool v = is_vnl(R).holds;
        agree = v == vnl_via_corner_condition(R).holds && v == vnl_via_mr_local(R).holds;
      } catch (const InternalInconsistency&) {
        agree = false;
      }
      if (!agree) {
        ++disagreements;
        if (first.empty()) first = " first=" + e.expr;
      }
    }
    verdict(5, rings > 0 && disagreements == 0,
            "abelian rings=" + std::to_string(rings) + " disagreements=" + std::to_string(disagreements) + first);
  });

  guarded(6, [] {
    const auto T = build_upper_triangular(2, build_cyclic(2));
    const auto M = maximal_regular_ideal(T.ring);
    verdict(6, M.is_zero(), "M(T2(F2)) = " + format_members(M.members().members()));
  });

  guarded(7, [&] {
    const auto t0 = Clock::now();
    const auto T = build_upper_triangular(3, build_cyclic(2));
    const FiniteRing& R = T.ring;
    const bool two = is_n_vnl(R, 2).holds;
    const auto three = is_n_vnl(R, 3);
    bool witness_ok = false;
    std::string witness;
    if (!three.holds && three.witness && three.witness->elements.size() == 3) {
      const auto& w = three.witness->elements;
      witness = format_members(w);
      witness_ok = brute_unimodular3(R, w[0], w[1], w[2]);
      for (Index a : w) witness_ok = witness_ok && !brute_regular(R, a);
    }
    std::size_t swept = 0;
    std::string sweep_fail;
    for (const auto& e : full.entries) {
      if (!e.analyzable() || e.ring().order() > 64 || !is_vnl(e.ring()).holds) continue;
      ++swept;
      if (!is_n_vnl(e.ring(), 2).holds && sweep_fail.empty()) sweep_fail = e.expr;
    }
    const double s = seconds_since(t0);
    verdict(7, two && witness_ok && sweep_fail.empty() && s < 300,
            std::string("T3(F2) 2-vnl=") + (two ? "true" : "false") + " 3-vnl=" + (three.holds ? "true" : "false") +
                " witness=" + witness + (witness_ok ? " verified" : " unverified") +
                " sweep=" + std::to_string(swept) + (sweep_fail.empty() ? "" : " failed at " + sweep_fail) +
                " time=" + std::to_string(s) + "s");
  });

  guarded(8, [&] {
    std::size_t rings = 0;
    std::string broken;
    for (const auto& e : full.entries) {
      if (!e.analyzable()) continue;
      ++rings;
      const FiniteRing& R = e.ring();
      const bool nj = is_nj(R).holds, v = is_vnl(R).holds, ex = is_exchange_ring(R).holds,
                 po = is_potent(R).holds, se = is_semipotent(R).holds;
      const bool chain = (!nj || v) && (!v || ex) && (!ex || po) && (!po || se);
      if ((!chain || !ex || !po || !se) && broken.empty()) broken = e.expr;
    }
    const FiniteRing Z36 = build_cyclic(36);
    const auto T3 = build_upper_triangular(3, build_cyclic(2));
    const bool z36 = is_potent(Z36).holds && !is_vnl(Z36).holds;
    const bool t3 = is_vnl(T3.ring).holds && !is_nj(T3.ring).holds;
    verdict(8, broken.empty() && z36 && t3,
            "rings=" + std::to_string(rings) + (broken.empty() ? "" : " broken at " + broken) +
                " Z36 potent-not-vnl=" + (z36 ? "yes" : "no") + " T3(F2) vnl-not-nj=" + (t3 ? "yes" : "no"));
  });

  guarded(9, [&] {
    std::size_t classified = 0;
    std::string problem;
    for (const auto& e : full.entries) {
      if (!e.analyzable() || !is_vnl(e.ring()).holds) continue;
      try {
        const auto c = classify_semiperfect_vnl(e.ring());
        if (c.tag == VnlShape::NotVNL || !shape_violation(e.ring(), c).empty()) problem = e.expr;
        ++classified;
      } catch (const InternalInconsistency& ex) {
        if (problem.empty()) problem = e.expr + ": " + ex.what();
      }
    }
    const auto F2 = build_cyclic(2);
    const auto t2 = classify_semiperfect_vnl(build_upper_triangular(2, F2).ring).tag;
    const auto t3 = classify_semiperfect_vnl(build_upper_triangular(3, F2).ring).tag;
    const auto m2 = classify_semiperfect_vnl(build_matrix_ring(2, F2).ring).tag;
    const bool fixed = t2 == VnlShape::TypeR1 && t3 == VnlShape::TypeR2 && m2 == VnlShape::Semisimple;
    verdict(9, problem.empty() && fixed,
            "classified=" + std::to_string(classified) + (problem.empty() ? "" : " problem at " + problem) +
                " T2(F2)=" + to_string(t2) + " T3(F2)=" + to_string(t3) + " M2(F2)=" + to_string(m2));
  });

  guarded(10, [&] {
    const std::vector<std::string> ids{"lemma-2.4", "lemma-2.18", "lemma-4.1", "lemma-4.2", "prop-2.2", "cor-2.3",
                                       "cor-2.6",   "cor-2.7",    "lemma-3.4", "thm-4.8",   "prop-5.2"};
    auto failures = [](const std::vector<TheoremReport>& reports, std::string& first) {
      std::size_t n = 0;
      for (const auto& r : reports) {
        n += r.failures.size();
        if (!r.failures.empty() && first.empty()) first = r.theorem_id + " on " + r.failures.front().ring;
      }
      return n;
    };
    std::string first;
    SuiteContext quick_ctx{quick, quick_elab, {}};
    const std::size_t quick_failures = failures(run_theorem_suite(ids, quick_ctx), first);
    const auto t0 = Clock::now();
    SuiteContext full_ctx{full, full_elab, {}};
    const std::size_t full_failures = failures(run_theorem_suite(ids, full_ctx), first);
    const double s = seconds_since(t0);
    verdict(10, quick_failures == 0 && full_failures == 0 && s < 900,
            "quick failures=" + std::to_string(quick_failures) + " full failures=" + std::to_string(full_failures) +
                " full time=" + std::to_string(s) + "s" + (first.empty() ? "" : " first=" + first));
  });

  guarded(11, [&] {
    std::size_t rings = 0;
    std::string mismatch;
    for (const auto& e : full.entries) {
      if (!e.analyzable() || e.ring().order() > 16) continue;
      ++rings;
      if (maximal_regular_ideal(e.ring()).members() != maximal_regular_ideal_exhaustive(e.ring()).members() &&
          mismatch.empty())
        mismatch = e.expr;
    }
    verdict(11, rings > 0 && mismatch.empty(),
            "rings of order<=16: " + std::to_string(rings) + (mismatch.empty() ? "" : " mismatch at " + mismatch));
  });

  guarded(12, [&] {
    const std::string cmd = "\"" + cli + "\" verify all --profile quick --seed 7 --json 2>&1";
    const std::string a = run_command(cmd), b = run_command(cmd);
    const bool ok = !a.empty() && a.find("\"reports\"") != std::string::npos && strip_wall_time(a) == strip_wall_time(b);
    verdict(12, ok, "two runs, " + std::to_string(a.size()) + " bytes, identical modulo wall_time: " +
                        (ok ? "yes" : "no"));
  });

  std::cout << (failed == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed) + " CRITERIA FAILED") << " in "
            << seconds_since(start) << "s" << std::endl;
  return failed == 0 ? 0 : 1;
}
