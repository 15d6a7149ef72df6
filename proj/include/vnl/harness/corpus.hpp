#pragma once

#include <set>
#include <string>
#include <vector>

#include "vnl/harness/dsl.hpp"

namespace vnl::harness {

enum class Profile { Quick, Full };

inline const char* to_string(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

inline Profile parse_profile(const std::string& text) {
  if (text == "quick") return Profile::Quick;
  if (text == "full") return Profile::Full;
  throw InvalidParameter("unknown profile '" + text + "' (expected quick or full)");
}

enum class Origin { Base, Product, Corner, Quotient, Triangular };

inline const char* to_string(Origin o) {
  switch (o) {
    case Origin::Base: return "base";
    case Origin::Product: return "product";
    case Origin::Corner: return "corner";
    case Origin::Quotient: return "quotient";
    case Origin::Triangular: return "triangular";
  }
  return "?";
}

struct CorpusEntry {
  std::string expr;
  Origin origin;
  BuiltPtr built;

  const FiniteRing& ring() const { return built->ring; }
  /// Brute-force analyses run only on rings with materialized tables.
  bool analyzable() const { return ring().repr_kind() == ReprKind::DenseTable; }
};

struct Corpus {
  Profile profile;
  std::uint64_t seed;
  std::vector<CorpusEntry> entries;
};

namespace detail {

/// Nonzero proper regular two-sided ideals, one expression per member set:
/// "M" when the set is M(R), otherwise the least generator.
inline std::vector<std::string> regular_ideal_refs(const FiniteRing& R) {
  std::vector<std::string> refs;
  std::vector<ElementSet> seen;
  auto admit = [&](const SubsetIdeal& I, std::string ref) {
    if (I.is_zero() || I.members().full() || !is_regular_ideal(I)) return;
    for (const auto& s : seen)
      if (s == I.members()) return;
    seen.push_back(I.members());
    refs.push_back(std::move(ref));
  };
  admit(maximal_regular_ideal(R), "M");
  for (Index a = 0; a < R.order(); ++a) {
    if (a == R.zero() || !is_regular(R, a)) continue;
    admit(ideal_generated(R, a), std::to_string(a));
  }
  return refs;
}

}  // namespace detail

/// Triangular instances shared by both profiles.
inline std::vector<std::string> quick_triangular_exprs() {
  return {
      "Tri(GF(2),self,GF(2))",
      "Tri(Zn(4),self,Zn(4))",
      "Tri(Zn(6),self,Zn(6))",
      "Tri(Zn(6),ideal:3,Zn(6))",
      "Tri(Zn(6),ideal:2,Zn(6))",
      "Tri(Prod(GF(2),GF(2)),ideal:2,Prod(GF(2),GF(2)))",
      "Tri(Prod(GF(2),GF(2)),self,Prod(GF(2),GF(2)))",
      "Tri(Prod(GF(2),GF(2,2)),ideal:4,Prod(GF(2),GF(2,2)))",
      "Tri(Zn(6),cyc:2,Zn(4))",
      "Tri(GF(2),cyc:2,Zn(4))",
      "Tri(Zn(4),cyc:2,GF(2))",
      "Tri(Zn(12),cyc:3,GF(3))",
      "Tri(Zn(12),cyc:2,GF(2))",
      "Tri(T(2,GF(2)),col,GF(2))",
      "Tri(GF(2),row,T(2,GF(2)))",
      "Tri(M(2,GF(2)),col,GF(2))",
      "Tri(GF(2),row,M(2,GF(2)))",
      "Tri(M(2,GF(2)),zero,M(2,GF(2)))",
      "Tri(M(2,GF(2)),self,M(2,GF(2)))",
      "Tri(M(2,GF(2)),lastcol,T(2,GF(2)))",
      "Tri(GF(2,2),frob,GF(2,2))",
  };
}

/// Deterministic for a fixed (profile, seed); the seed feeds sampled ring
/// validation through the elaborator's configuration.
inline Corpus generate_corpus(Profile profile, std::uint64_t seed, Elaborator& elab) {
  Corpus corpus{profile, seed, {}};
  std::set<std::string> present;
  auto add = [&](const std::string& expr, Origin origin) {
    if (!present.insert(expr).second) return;
    corpus.entries.push_back({expr, origin, elab.build(expr)});
  };

  const bool full = profile == Profile::Full;
  for (Index n = 1; n <= (full ? 64u : 36u); ++n) add("Zn(" + std::to_string(n) + ")", Origin::Base);
  for (const char* e : {"GF(2)", "GF(3)", "GF(2,2)", "M(2,GF(2))", "T(2,GF(2))", "T(3,GF(2))"})
    add(e, Origin::Base);
  if (full)
    for (const char* e : {"T(4,GF(2))", "T(2,GF(3))", "T(3,GF(3))", "M(2,GF(3))", "M(3,GF(2))", "M(2,Zn(9))"})
      add(e, Origin::Base);

  const std::vector<std::string> pieces{"Zn(4)", "GF(2)", "GF(3)", "T(2,GF(2))"};
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i; j < pieces.size(); ++j)
      add("Prod(" + pieces[i] + "," + pieces[j] + ")", Origin::Product);

  const Index closure_cap = full ? 256 : 64;
  const std::size_t roots = corpus.entries.size();
  for (std::size_t k = 0; k < roots; ++k) {
    const auto base = corpus.entries[k];
    const FiniteRing& R = base.ring();
    if (R.order() > closure_cap || !base.analyzable()) continue;
    for (Index e : idempotents(R))
      if (e != R.zero() && e != R.one()) add("Corner(" + base.expr + "," + std::to_string(e) + ")", Origin::Corner);
    for (const auto& ref : detail::regular_ideal_refs(R))
      add("Quot(" + base.expr + "," + ref + ")", Origin::Quotient);
  }

  for (const auto& e : quick_triangular_exprs()) add(e, Origin::Triangular);
  if (full)
    for (const char* e : {"Tri(GF(3),self,GF(3))", "Tri(M(2,GF(3)),col,GF(3))", "Tri(Zn(9),cyc:3,GF(3))",
                          "Tri(Zn(6),cyc:3,Zn(9))", "Tri(Zn(12),ideal:4,Zn(12))", "Tri(Zn(10),ideal:5,Zn(10))",
                          "Tri(Prod(GF(2),GF(3)),ideal:3,Prod(GF(2),GF(3)))",
                          "Tri(Prod(GF(2),M(2,GF(2))),ideal:16,Prod(GF(2),M(2,GF(2))))"})
      add(e, Origin::Triangular);
  return corpus;
}

}  // namespace vnl::harness
