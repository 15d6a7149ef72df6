#pragma once

// Ring-expression language:
//   Zn(n) | GF(p[,k[,poly]]) | M(n,e) | T(n,e) | Prod(e,...) | Tri(e,module,e)
//   | Quot(e,ideal) | Corner(e,idempotent) | Center(e)
// Module references: self, zero, ideal:<a>, col, row, lastcol, cyc:<g>, or a
// sidecar name. Ideal references: J, M, <a> (ideal generated by a), or a
// sidecar name.

#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vnl/constructions.hpp"
#include "vnl/structure.hpp"
#include "vnl/triangular.hpp"

namespace vnl::harness {

class SyntaxError : public InvalidParameter {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : InvalidParameter("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class ExprKind { Zn, GF, M, T, Prod, Tri, Quot, Corner, Center };

struct Expr {
  ExprKind kind;
  std::size_t offset = 0;
  std::vector<Index> ints;  // Zn: n; GF: p[,k]; M/T: n; Corner: e
  std::string poly;         // GF modulus as written
  std::string ref;          // Tri module / Quot ideal
  std::vector<std::shared_ptr<const Expr>> children;
};

using ExprPtr = std::shared_ptr<const Expr>;

inline std::string print(const Expr& e) {
  auto child = [&](std::size_t i) { return print(*e.children[i]); };
  switch (e.kind) {
    case ExprKind::Zn: return "Zn(" + std::to_string(e.ints[0]) + ")";
    case ExprKind::GF: {
      std::string out = "GF(" + std::to_string(e.ints[0]);
      if (e.ints.size() > 1) out += "," + std::to_string(e.ints[1]);
      if (!e.poly.empty()) out += "," + e.poly;
      return out + ")";
    }
    case ExprKind::M: return "M(" + std::to_string(e.ints[0]) + "," + child(0) + ")";
    case ExprKind::T: return "T(" + std::to_string(e.ints[0]) + "," + child(0) + ")";
    case ExprKind::Prod: {
      std::string out = "Prod(";
      for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? "," : "") + child(i);
      return out + ")";
    }
    case ExprKind::Tri: return "Tri(" + child(0) + "," + e.ref + "," + child(1) + ")";
    case ExprKind::Quot: return "Quot(" + child(0) + "," + e.ref + ")";
    case ExprKind::Corner: return "Corner(" + child(0) + "," + std::to_string(e.ints[0]) + ")";
    case ExprKind::Center: return "Center(" + child(0) + ")";
  }
  return {};
}

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Index integer() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > std::numeric_limits<Index>::max()) throw SyntaxError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "expected integer");
    return static_cast<Index>(value);
  }

  // A reference or polynomial: everything up to the next ',' or ')'.
  std::string word(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != '(' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw SyntaxError(pos_, std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr expr() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string head(text_.substr(start, pos_ - start));
    static const std::map<std::string, ExprKind> heads{
        {"Zn", ExprKind::Zn},     {"GF", ExprKind::GF},         {"M", ExprKind::M},
        {"T", ExprKind::T},       {"Prod", ExprKind::Prod},     {"Tri", ExprKind::Tri},
        {"Quot", ExprKind::Quot}, {"Corner", ExprKind::Corner}, {"Center", ExprKind::Center}};
    auto it = heads.find(head);
    if (it == heads.end())
      throw SyntaxError(start, head.empty() ? "expected ring expression" : "unknown constructor '" + head + "'");
    auto e = std::make_shared<Expr>();
    e->kind = it->second;
    e->offset = start;
    expect('(');
    switch (e->kind) {
      case ExprKind::Zn: e->ints.push_back(integer()); break;
      case ExprKind::GF:
        e->ints.push_back(integer());
        if (accept(',')) {
          e->ints.push_back(integer());
          if (accept(',')) e->poly = word("polynomial");
        }
        break;
      case ExprKind::M:
      case ExprKind::T:
        e->ints.push_back(integer());
        expect(',');
        e->children.push_back(expr());
        break;
      case ExprKind::Prod:
        e->children.push_back(expr());
        while (accept(',')) e->children.push_back(expr());
        break;
      case ExprKind::Tri:
        e->children.push_back(expr());
        expect(',');
        e->ref = word("module reference");
        expect(',');
        e->children.push_back(expr());
        break;
      case ExprKind::Quot:
        e->children.push_back(expr());
        expect(',');
        e->ref = word("ideal reference");
        break;
      case ExprKind::Corner:
        e->children.push_back(expr());
        expect(',');
        e->ints.push_back(integer());
        break;
      case ExprKind::Center: e->children.push_back(expr()); break;
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ExprPtr parse_ring_expr(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Coefficient list (lowest degree first) of a polynomial such as "x^2+x+1"
/// or "2x^3+1".
inline Poly parse_poly(const std::string& text) {
  Poly f;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Poly {
    throw InvalidParameter("polynomial '" + text + "': " + why + " at offset " + std::to_string(pos));
  };
  auto digits = [&](Index& out) {
    const std::size_t start = pos;
    Index value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      value = value * 10 + static_cast<Index>(text[pos++] - '0');
    if (pos > start) out = value;
    return pos > start;
  };
  while (true) {
    Index coeff = 1, degree = 0;
    const bool has_coeff = digits(coeff);
    if (pos < text.size() && text[pos] == 'x') {
      ++pos;
      degree = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        if (!digits(degree)) return fail("expected exponent");
      }
    } else if (!has_coeff) {
      return fail("expected term");
    }
    if (f.size() <= degree) f.resize(degree + 1, 0);
    f[degree] += coeff;
    if (pos == text.size()) break;
    if (text[pos] != '+') return fail("expected '+'");
    ++pos;
  }
  return f;
}

struct Built {
  std::string expr;
  FiniteRing ring;
  std::optional<MatrixRing> matrix;
  std::optional<ProductRing> product;
  std::optional<TriangularRing> tri;
  std::optional<QuotientRing> quotient;
  std::optional<Subring> subring;
};

using BuiltPtr = std::shared_ptr<const Built>;

/// User-supplied bimodules and ideals, keyed by name.
struct Sidecar {
  struct ModuleEntry {
    std::string left_ring, right_ring;
    Index group_order = 0;
    std::vector<Index> add, left, right;  // row-major
  };
  struct IdealEntry {
    std::string ring;
    std::vector<Index> members;
  };
  std::map<std::string, ModuleEntry> modules;
  std::map<std::string, IdealEntry> ideals;

  /// Entries of `other` replace entries of the same name.
  void merge(const Sidecar& other) {
    for (const auto& [k, v] : other.modules) modules[k] = v;
    for (const auto& [k, v] : other.ideals) ideals[k] = v;
  }

  static Sidecar from_json(const nlohmann::json& j) {
    Sidecar out;
    auto flatten = [](const nlohmann::json& rows, const std::string& what) {
      std::vector<Index> flat;
      if (!rows.is_array()) throw InvalidParameter("sidecar " + what + " must be an array of rows");
      for (const auto& row : rows) {
        if (!row.is_array()) throw InvalidParameter("sidecar " + what + " must be an array of rows");
        for (const auto& v : row) flat.push_back(v.get<Index>());
      }
      return flat;
    };
    try {
      if (j.contains("modules"))
        for (const auto& [name, m] : j.at("modules").items()) {
          ModuleEntry e;
          e.left_ring = m.at("left_ring").get<std::string>();
          e.right_ring = m.at("right_ring").get<std::string>();
          e.group_order = m.at("group_order").get<Index>();
          e.add = flatten(m.at("add_table"), name + ".add_table");
          e.left = flatten(m.at("left_action"), name + ".left_action");
          e.right = flatten(m.at("right_action"), name + ".right_action");
          out.modules[name] = std::move(e);
        }
      if (j.contains("ideals"))
        for (const auto& [name, i] : j.at("ideals").items())
          out.ideals[name] = {i.at("ring").get<std::string>(), i.at("members").get<std::vector<Index>>()};
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidParameter(std::string("malformed sidecar: ") + ex.what());
    }
    return out;
  }

  static Sidecar from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open sidecar file " + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& ex) {
      throw InvalidParameter("sidecar " + path + " is not valid JSON: " + ex.what());
    }
    return from_json(j);
  }
};

/// Built-in sidecar: GF(4) over itself with the right action twisted by the
/// Frobenius map s -> s^2, and the ideal {0,6} of Z_12.
inline Sidecar default_sidecar() {
  Sidecar s;
  const auto F4 = build_field(2, 2, default_modulus(2, 2));
  Sidecar::ModuleEntry frob{"GF(2,2)", "GF(2,2)", 4, {}, {}, {}};
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) {
      frob.add.push_back(F4.add(a, b));
      frob.left.push_back(F4.mul(a, b));
      frob.right.push_back(F4.mul(a, F4.mul(b, b)));
    }
  s.modules["frob"] = std::move(frob);
  s.ideals["six"] = {"Zn(12)", {0, 6}};
  return s;
}

/// Turns expressions into rings. Structurally equal subexpressions elaborate
/// to the same ring object, so Tri(e, self, e) sees one ring on both sides.
class Elaborator {
 public:
  explicit Elaborator(RingConfig cfg = {}, Sidecar sidecar = default_sidecar())
      : cfg_(cfg), sidecar_(std::move(sidecar)) {}

  const RingConfig& config() const { return cfg_; }
  const Sidecar& sidecar() const { return sidecar_; }

  BuiltPtr build(std::string_view text) { return build(*parse_ring_expr(text)); }

  BuiltPtr build(const Expr& e) {
    const std::string key = print(e);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto built = elaborate(e, key);
    memo_.emplace(key, built);
    return built;
  }

  /// The ideal named by `ref` in `base`, as used by Quot.
  SubsetIdeal resolve_ideal(const Built& base, const std::string& ref) {
    const FiniteRing& R = base.ring;
    if (ref == "J") return jacobson_radical(R);
    if (ref == "M") return maximal_regular_ideal(R);
    if (std::isdigit(static_cast<unsigned char>(ref[0]))) {
      const Index a = parse_index(ref, "ideal generator");
      if (a >= R.order())
        throw InvalidParameter("ideal generator " + ref + " is not an element of " + base.expr);
      return ideal_generated(R, a);
    }
    auto it = sidecar_.ideals.find(ref);
    if (it == sidecar_.ideals.end()) throw InvalidParameter("unknown ideal reference '" + ref + "'");
    if (canonical(it->second.ring) != base.expr)
      throw InvalidParameter("sidecar ideal '" + ref + "' belongs to " + it->second.ring + ", not " + base.expr);
    ElementSet set(R.order());
    for (Index a : it->second.members) {
      if (a >= R.order()) throw InvalidParameter("sidecar ideal '" + ref + "' lists out-of-range element");
      set.insert(a);
    }
    return SubsetIdeal(R, std::move(set), Sidedness::TwoSided, ref);
  }

  /// The bimodule named by `ref` between `left` and `right`, as used by Tri.
  Bimodule resolve_module(const Built& left, const std::string& ref, const Built& right) {
    const FiniteRing& R = left.ring;
    const FiniteRing& S = right.ring;
    auto need_same = [&](const char* what) {
      if (left.expr != right.expr)
        throw InvalidParameter(std::string("module '") + what + "' needs equal outer rings, got " + left.expr +
                               " and " + right.expr);
    };
    if (ref == "self") {
      need_same("self");
      return ring_bimodule(R);
    }
    if (ref == "zero") return zero_bimodule(R, S);
    if (ref.rfind("ideal:", 0) == 0) {
      need_same("ideal");
      const Index a = parse_index(ref.substr(6), "ideal generator");
      if (a >= R.order()) throw InvalidParameter("ideal generator " + ref.substr(6) + " is not an element of " + left.expr);
      return ideal_bimodule(ideal_generated(R, a), ref);
    }
    if (ref == "col") {
      if (!left.matrix || !left.matrix->base.same_ring(S))
        throw InvalidParameter("module 'col' needs Tri(M(n,B) or T(n,B), col, B), got " + left.expr + " and " +
                               right.expr);
      return column_module(*left.matrix);
    }
    if (ref == "row") {
      if (!right.matrix || !right.matrix->base.same_ring(R))
        throw InvalidParameter("module 'row' needs Tri(B, row, M(n,B) or T(n,B)), got " + left.expr + " and " +
                               right.expr);
      return row_module(*right.matrix);
    }
    if (ref == "lastcol") {
      if (!left.matrix || !right.matrix)
        throw InvalidParameter("module 'lastcol' needs matrix rings on both sides");
      return last_column_module(*left.matrix, *right.matrix);
    }
    if (ref.rfind("cyc:", 0) == 0) return cyclic_bimodule(R, S, parse_index(ref.substr(4), "cyclic order"));
    auto it = sidecar_.modules.find(ref);
    if (it == sidecar_.modules.end()) throw InvalidParameter("unknown module reference '" + ref + "'");
    const auto& m = it->second;
    if (canonical(m.left_ring) != left.expr || canonical(m.right_ring) != right.expr)
      throw InvalidParameter("sidecar module '" + ref + "' is over (" + m.left_ring + ", " + m.right_ring +
                             "), not (" + left.expr + ", " + right.expr + ")");
    const std::size_t g = m.group_order;
    if (g == 0 || m.add.size() != g * g || m.left.size() != R.order() * g || m.right.size() != g * S.order())
      throw InvalidParameter("sidecar module '" + ref + "' has tables of the wrong shape");
    for (auto* table : {&m.add, &m.left, &m.right})
      for (Index v : *table)
        if (v >= g) throw InvalidParameter("sidecar module '" + ref + "' has an entry outside the group");
    return Bimodule::from_tables(R, S, m.group_order, m.add, m.left, m.right, ref);
  }

 private:
  static Index parse_index(const std::string& text, const char* what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidParameter(std::string("expected integer ") + what + ", got '" + text + "'");
    return static_cast<Index>(std::stoul(text));
  }

  std::string canonical(const std::string& text) { return build(text)->expr; }

  BuiltPtr elaborate(const Expr& e, const std::string& key) {
    try {
      return elaborate_unchecked(e, key);
    } catch (const SyntaxError&) {
      throw;
    } catch (const InvalidParameter& ex) {
      throw InvalidParameter("in " + key + " at offset " + std::to_string(e.offset) + ": " + ex.what());
    } catch (const CapacityError& ex) {
      throw CapacityError("in " + key + " at offset " + std::to_string(e.offset) + ": " + ex.what());
    }
  }

  BuiltPtr make(const std::string& key, FiniteRing ring) {
    return std::make_shared<Built>(Built{key, std::move(ring), {}, {}, {}, {}, {}});
  }

  BuiltPtr elaborate_unchecked(const Expr& e, const std::string& key) {
    auto sub = [&](std::size_t i) { return build(*e.children[i]); };
    switch (e.kind) {
      case ExprKind::Zn: return make(key, build_cyclic(e.ints[0], cfg_));
      case ExprKind::GF: {
        const Index p = e.ints[0];
        const Index k = e.ints.size() > 1 ? e.ints[1] : 1;
        const Poly modulus = e.poly.empty() ? default_modulus(p, k) : parse_poly(e.poly);
        return make(key, build_field(p, k, modulus, cfg_));
      }
      case ExprKind::M:
      case ExprKind::T: {
        if (e.ints[0] == 0) throw InvalidParameter("matrix size must be positive");
        auto base = sub(0);
        auto A = e.kind == ExprKind::M ? build_matrix_ring(e.ints[0], base->ring, cfg_)
                                       : build_upper_triangular(e.ints[0], base->ring, cfg_);
        auto out = std::make_shared<Built>(Built{key, A.ring, A, {}, {}, {}, {}});
        return out;
      }
      case ExprKind::Prod: {
        std::vector<FiniteRing> factors;
        for (std::size_t i = 0; i < e.children.size(); ++i) factors.push_back(sub(i)->ring);
        auto P = build_product(std::move(factors), cfg_);
        return std::make_shared<Built>(Built{key, P.ring, {}, P, {}, {}, {}});
      }
      case ExprKind::Tri: {
        auto left = sub(0), right = sub(1);
        auto M = resolve_module(*left, e.ref, *right);
        auto T = build_formal_triangular(left->ring, M, right->ring, cfg_);
        return std::make_shared<Built>(Built{key, T.ring(), {}, {}, T, {}, {}});
      }
      case ExprKind::Quot: {
        auto base = sub(0);
        auto Q = build_quotient(base->ring, resolve_ideal(*base, e.ref), cfg_);
        return std::make_shared<Built>(Built{key, Q.ring, {}, {}, {}, Q, {}});
      }
      case ExprKind::Corner: {
        auto base = sub(0);
        if (e.ints[0] >= base->ring.order())
          throw InvalidParameter("element " + std::to_string(e.ints[0]) + " is outside " + base->expr);
        auto C = build_corner(base->ring, e.ints[0], cfg_);
        return std::make_shared<Built>(Built{key, C.ring, {}, {}, {}, {}, C});
      }
      case ExprKind::Center: {
        auto C = center(sub(0)->ring, cfg_);
        return std::make_shared<Built>(Built{key, C.ring, {}, {}, {}, {}, C});
      }
    }
    throw InvalidParameter("unhandled expression");
  }

  RingConfig cfg_;
  Sidecar sidecar_;
  std::map<std::string, BuiltPtr> memo_;
};

/// {label, order, repr_kind}
inline nlohmann::json describe(const Built& b) {
  return {{"label", b.expr}, {"order", b.ring.order()}, {"repr_kind", to_string(b.ring.repr_kind())}};
}

}  // namespace vnl::harness
