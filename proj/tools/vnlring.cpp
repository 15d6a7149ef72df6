// Command-line front end: build, inspect and check rings named by
// expressions; run the theorem suite and the open-question searches.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vnl/harness/report.hpp"
#include "vnl/harness/search.hpp"

using namespace vnl;
using namespace vnl::harness;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t dense_cap = 4096;
  std::size_t sample_budget = 100000;
  Index budget = 64;
  std::string sidecar;
  std::string profile = "quick";
};

Elaborator make_elaborator(const Globals& g) {
  RingConfig cfg;
  cfg.dense_cap = g.dense_cap;
  cfg.sample_budget = g.sample_budget;
  cfg.seed = g.seed;
  Sidecar side = default_sidecar();
  if (!g.sidecar.empty()) side.merge(Sidecar::from_file(g.sidecar));
  return Elaborator(cfg, side);
}

json report_json(const PropertyReport& r) {
  json j{{"property", r.property}, {"holds", r.holds}, {"method", r.method}};
  if (r.witness) j["witness"] = {{"elements", r.witness->elements}, {"note", r.witness->note}};
  return j;
}

void print_report(const PropertyReport& r) {
  std::cout << r.property << ": " << (r.holds ? "true" : "false") << " (" << r.method << ")";
  if (r.witness) std::cout << " witness " << format_members(r.witness->elements) << ": " << r.witness->note;
  std::cout << "\n";
}

PropertyReport ring_flag(const std::string& name, bool holds) { return {name, holds, std::nullopt, "brute-force"}; }

PropertyReport check_property(const std::string& property, const Built& b, const Globals& g) {
  const FiniteRing& R = b.ring;
  if (property == "vnl") return is_vnl(R);
  if (property == "nj") return is_nj(R);
  if (property == "exchange") return is_exchange_ring(R);
  if (property == "potent") return is_potent(R);
  if (property == "semipotent") return is_semipotent(R);
  if (property == "corner-condition") return vnl_via_corner_condition(R);
  if (property == "mr-local") return vnl_via_mr_local(R);
  if (property == "regular") return ring_flag(property, ring_is_regular(R));
  if (property == "local") return ring_flag(property, ring_is_local(R));
  if (property == "division") return ring_flag(property, ring_is_division(R));
  if (property == "commutative") return ring_flag(property, ring_is_commutative(R));
  if (property == "abelian") return ring_flag(property, ring_is_abelian(R));
  if (property == "triangular-criterion" || property == "left-partial" || property == "right-partial") {
    if (!b.tri) throw InvalidParameter("property '" + property + "' needs a Tri(...) expression");
    const Bimodule& M = b.tri->module();
    if (property == "left-partial") return is_partial_module(M, Sidedness::Left);
    if (property == "right-partial") return is_partial_module(M, Sidedness::Right);
    return vnl_via_thm212(b.tri->left_ring(), M, b.tri->right_ring());
  }
  if (property.size() > 4 && property.substr(property.size() - 4) == "-vnl") {
    const std::string n = property.substr(0, property.size() - 4);
    if (n.find_first_not_of("0123456789") == std::string::npos)
      return is_n_vnl(R, static_cast<Index>(std::stoul(n)), {g.budget});
  }
  throw InvalidParameter("unknown property '" + property +
                         "'; known: vnl, nj, exchange, potent, semipotent, <n>-vnl, corner-condition, mr-local, "
                         "regular, local, division, commutative, abelian, triangular-criterion, left-partial, "
                         "right-partial");
}

int cmd_build(const Globals& g, const std::string& expr) {
  auto elab = make_elaborator(g);
  const auto b = elab.build(expr);
  if (g.json) {
    std::cout << describe(*b).dump() << "\n";
  } else {
    std::cout << b->expr << " order=" << b->ring.order() << " repr=" << to_string(b->ring.repr_kind()) << "\n";
  }
  return 0;
}

int cmd_classify(const Globals& g, const std::string& expr) {
  auto elab = make_elaborator(g);
  const auto b = elab.build(expr);
  const FiniteRing& R = b->ring;
  const auto flags = classify_ring(R);
  const auto census = idempotent_census(R);
  const auto shape = classify_semiperfect_vnl(R);
  json j = describe(*b);
  j["regular"] = flags.regular;
  j["local"] = flags.local;
  j["division"] = flags.division;
  j["semisimple"] = flags.semisimple;
  j["abelian"] = flags.abelian;
  j["commutative"] = flags.commutative;
  j["nontrivial_central_idempotent"] = flags.has_nontrivial_central_idempotent;
  j["idempotents"] = census.all.size();
  j["radical_order"] = jacobson_radical(R).size();
  j["maximal_regular_ideal_order"] = maximal_regular_ideal(R).size();
  j["vnl_shape"] = to_string(shape.tag);
  if (shape.tag != VnlShape::NotVNL) {
    j["semisimple_part"] = shape.semisimple_part;
    j["remainder"] = shape.remainder;
  }
  if (shape.r1) j["r1"] = {{"e_S", shape.r1->e_S}, {"e_L", shape.r1->e_L}};
  if (shape.r2) j["r2"] = {{"e_T", shape.r2->e_T}, {"e_D", shape.r2->e_D}};
  if (shape.not_vnl_witness) j["not_vnl_witness"] = *shape.not_vnl_witness;
  if (g.json) {
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
  }
  return 0;
}

int cmd_check(const Globals& g, const std::string& property, const std::string& expr) {
  auto elab = make_elaborator(g);
  const auto b = elab.build(expr);
  const auto r = check_property(property, *b, g);
  if (g.json) {
    auto j = report_json(r);
    j["ring"] = b->expr;
    std::cout << j.dump() << "\n";
  } else {
    print_report(r);
  }
  return r.holds ? 0 : kExitFailure;
}

int cmd_element(const Globals& g, const std::string& expr, Index a) {
  auto elab = make_elaborator(g);
  const auto b = elab.build(expr);
  const FiniteRing& R = b->ring;
  if (a >= R.order())
    throw InvalidParameter("element " + std::to_string(a) + " is outside " + b->expr + " of order " +
                           std::to_string(R.order()));
  json j{{"ring", b->expr}, {"element", a}};
  const auto w = regular_witness(R, a);
  j["regular"] = w.has_value();
  if (w) {
    j["inner_inverse"] = w->inner_inverse;
    j["reflexive_inverse"] = w->reflexive_inverse;
  }
  const auto u = unit_inverse(R, a);
  j["unit"] = u.has_value();
  if (u) j["inverse"] = *u;
  j["idempotent"] = is_idempotent(R, a);
  j["central"] = is_central(R, a);
  j["in_radical"] = in_radical(R, a);
  j["complement_regular"] = is_regular(R, R.complement(a));
  if (auto x = exchange_witness(R, a)) j["exchange_idempotent"] = x->idempotent;
  if (b->tri) {
    const auto t = b->tri->decode(a);
    j["triple"] = {t.r, t.m, t.s};
  }
  if (g.json) {
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << v.dump() << "\n";
  }
  return 0;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& ids) {
  for (const auto& id : ids)
    if (id != "all") find_check(id);
  const Profile profile = parse_profile(g.profile);
  auto elab = make_elaborator(g);
  const auto corpus = generate_corpus(profile, g.seed, elab);
  SuiteContext ctx{corpus, elab, {g.budget}};
  const auto reports = run_theorem_suite(ids, ctx);
  bool failed = false;
  for (const auto& r : reports) failed = failed || !r.failures.empty();
  if (g.json) {
    std::cout << to_json(reports, profile, g.seed).dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_text(std::cout, r);
    std::cout << (failed ? "FAILED" : "ALL PASSED") << " (" << reports.size() << " checks, " << corpus.entries.size()
              << " corpus rings)\n";
  }
  return failed ? kExitFailure : 0;
}

int cmd_search(const Globals& g, const std::string& which) {
  check_question(which);
  const Profile profile = parse_profile(g.profile);
  auto elab = make_elaborator(g);
  const auto corpus = generate_corpus(profile, g.seed, elab);
  SuiteContext ctx{corpus, elab, {g.budget}};
  const auto r = search_question(which, ctx);
  if (g.json) {
    std::cout << to_json({r}, profile, g.seed).dump(2) << "\n";
  } else {
    std::cout << r.theorem_id << ": " << r.instances_checked << " rings searched (" << r.corpus_description << ")\n";
    if (r.failures.empty()) std::cout << "no counterexample up to the searched bound\n";
    for (const auto& f : r.failures) std::cout << "  " << f.ring << " [" << f.witness << "]: " << f.condition << "\n";
  }
  return 0;
}

int cmd_corpus(const Globals& g, const std::string& action) {
  if (action != "list") throw InvalidParameter("unknown corpus action '" + action + "' (expected list)");
  const Profile profile = parse_profile(g.profile);
  auto elab = make_elaborator(g);
  const auto corpus = generate_corpus(profile, g.seed, elab);
  if (g.json) {
    json list = json::array();
    for (const auto& e : corpus.entries) {
      auto j = describe(*e.built);
      j["origin"] = to_string(e.origin);
      list.push_back(j);
    }
    std::cout << json{{"profile", to_string(profile)}, {"seed", g.seed}, {"rings", list}}.dump(2) << "\n";
  } else {
    for (const auto& e : corpus.entries)
      std::cout << e.expr << "\t" << e.ring().order() << "\t" << to_string(e.ring().repr_kind()) << "\t"
                << to_string(e.origin) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ring workbench for VNL rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--seed", g.seed, "Seed for sampled validation");
  app.add_option("--dense-cap", g.dense_cap, "Largest order stored as Cayley tables");
  app.add_option("--budget", g.budget, "Largest order for n-VNL scans");
  app.add_option("--sample-budget", g.sample_budget, "Random triples for sampled axiom checks");
  app.add_option("--sidecar", g.sidecar, "JSON file with extra bimodules and ideals")->check(CLI::ExistingFile);

  std::string expr, property, which, action;
  Index index = 0;
  std::vector<std::string> ids;

  auto* build = app.add_subcommand("build", "Construct a ring and describe it");
  build->add_option("expr", expr, "Ring expression")->required();
  auto* classify = app.add_subcommand("classify", "Structural flags and semiperfect VNL shape");
  classify->add_option("expr", expr, "Ring expression")->required();
  auto* check = app.add_subcommand("check", "Evaluate one property");
  check->add_option("property", property, "Property name")->required();
  check->add_option("expr", expr, "Ring expression")->required();
  auto* element = app.add_subcommand("element", "Describe one element");
  element->add_option("expr", expr, "Ring expression")->required();
  element->add_option("index", index, "Element index")->required();
  auto* verify = app.add_subcommand("verify", "Run theorem checks over the corpus");
  verify->add_option("ids", ids, "Theorem ids, or all")->required();
  verify->add_option("--profile", g.profile, "quick or full");
  auto* search = app.add_subcommand("search", "Search for counterexamples to q53 or q54");
  search->add_option("question", which, "q53 or q54")->required();
  search->add_option("--profile", g.profile, "quick or full");
  auto* corpus = app.add_subcommand("corpus", "Corpus operations");
  corpus->add_option("action", action, "list")->required();
  corpus->add_option("--profile", g.profile, "quick or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build) return cmd_build(g, expr);
    if (*classify) return cmd_classify(g, expr);
    if (*check) return cmd_check(g, property, expr);
    if (*element) return cmd_element(g, expr, index);
    if (*verify) return cmd_verify(g, ids);
    if (*search) return cmd_search(g, which);
    if (*corpus) return cmd_corpus(g, action);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
