#pragma once

#include "vnl/harness/theorems.hpp"

namespace vnl::harness {

inline void check_question(const std::string& which) {
  if (which != "q53" && which != "q54")
    throw InvalidParameter("unknown question '" + which + "' (expected q53 or q54)");
}

/// Candidate counterexamples to two open questions, drawn from the corpus.
/// q53: the corner condition holds (finite rings are exchange) but the ring
/// is not VNL. q54: VNL but not 2-VNL. An empty failure list means no
/// counterexample up to the searched bound.
inline TheoremReport search_question(const std::string& which, SuiteContext& ctx) {
  check_question(which);
  TheoremReport rep;
  rep.theorem_id = which;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& e : ctx.corpus.entries) {
    if (!e.analyzable()) continue;
    const FiniteRing& R = e.ring();
    if (which == "q53") {
      ++rep.instances_checked;
      bool corner_condition = true;
      for (Index f : idempotents(R))
        if (!corner_is_regular(R, f) && !corner_is_regular(R, R.complement(f))) {
          corner_condition = false;
          break;
        }
      if (!corner_condition) continue;
      if (auto r = is_vnl(R); !r.holds)
        rep.failures.push_back({e.expr, "a=" + std::to_string(r.witness->elements.front()),
                                "candidate: corner condition holds but not VNL"});
    } else {
      if (R.order() > ctx.budget.max_order || !is_vnl(R).holds) continue;
      ++rep.instances_checked;
      if (auto r = is_n_vnl(R, 2, ctx.budget); !r.holds)
        rep.failures.push_back({e.expr, "row=" + format_members(r.witness->elements),
                                "candidate: VNL but not 2-VNL"});
    }
  }
  rep.corpus_description = std::string(to_string(ctx.corpus.profile)) + " corpus" +
                           (which == "q54" ? ", order <= " + std::to_string(ctx.budget.max_order) : "");
  rep.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace vnl::harness
