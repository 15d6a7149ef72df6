#pragma once

#include <ostream>

#include <nlohmann/json.hpp>

#include "vnl/harness/theorems.hpp"

namespace vnl::harness {

inline constexpr const char* kToolVersion = "0.1.0";

inline nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"ring", f.ring}, {"witness", f.witness}, {"condition", f.condition}});
  return {{"theorem_id", r.theorem_id},
          {"corpus", r.corpus_description},
          {"instances_checked", r.instances_checked},
          {"failures", failures},
          {"wall_time_ms", r.wall_time_ms}};
}

inline nlohmann::json to_json(const std::vector<TheoremReport>& reports, Profile profile, std::uint64_t seed) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  return {{"tool_version", kToolVersion}, {"profile", to_string(profile)}, {"seed", seed}, {"reports", list}};
}

inline void print_text(std::ostream& out, const TheoremReport& r) {
  out << r.theorem_id << ": " << (r.failures.empty() ? "PASS" : "FAIL") << " instances=" << r.instances_checked
      << " failures=" << r.failures.size() << " time=" << r.wall_time_ms << "ms\n";
  for (const auto& f : r.failures)
    out << "  " << f.ring << (f.witness.empty() ? "" : " [" + f.witness + "]") << ": " << f.condition << "\n";
}

}  // namespace vnl::harness
