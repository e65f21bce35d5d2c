#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace treecomp {

/// Symbolic order type of one linear block: finite orders, the four classic
/// countable/continuum types, lexicographic sums and products.
/// Prod(base, index) is index-many copies of base, index-major.
struct LinearTerm {
  enum class Kind { Fin, Omega, OmegaStar, Zeta, Eta, Lambda, Sum, Prod };

  Kind kind = Kind::Fin;
  int fin = 1;                    // Fin only, >= 1
  std::vector<LinearTerm> sub;    // Sum: parts (>=2 when normalized); Prod: {base, index}

  static LinearTerm Fin(int n) {
    LinearTerm t; t.kind = Kind::Fin; t.fin = n; assert(n >= 1); return t;
  }
  static LinearTerm mk(Kind k) { LinearTerm t; t.kind = k; return t; }
  static LinearTerm Omega() { return mk(Kind::Omega); }
  static LinearTerm OmegaStar() { return mk(Kind::OmegaStar); }
  static LinearTerm Zeta() { return mk(Kind::Zeta); }
  static LinearTerm Eta() { return mk(Kind::Eta); }
  static LinearTerm Lambda() { return mk(Kind::Lambda); }
  static LinearTerm Sum(std::vector<LinearTerm> parts) {
    LinearTerm t; t.kind = Kind::Sum; t.sub = std::move(parts); return t;
  }
  static LinearTerm Prod(LinearTerm base, LinearTerm index) {
    LinearTerm t; t.kind = Kind::Prod; t.sub = {std::move(base), std::move(index)};
    return t;
  }

  bool is(Kind k) const { return kind == k; }
  bool isPrimitive() const { return kind != Kind::Sum && kind != Kind::Prod; }
  const LinearTerm& base() const { assert(kind == Kind::Prod); return sub[0]; }
  const LinearTerm& index() const { assert(kind == Kind::Prod); return sub[1]; }

  bool containsLambda() const {
    if (kind == Kind::Lambda) return true;
    for (const auto& s : sub)
      if (s.containsLambda()) return true;
    return false;
  }

  friend bool operator==(const LinearTerm& a, const LinearTerm& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Fin) return a.fin == b.fin;
    return a.sub == b.sub;
  }
  friend bool operator!=(const LinearTerm& a, const LinearTerm& b) { return !(a == b); }
};

/// DSL rendering. '*' binds tighter than '+'; parenthesize as needed.
inline std::string term_text(const LinearTerm& t, bool parenInSum = false,
                             bool parenInProd = false) {
  using K = LinearTerm::Kind;
  switch (t.kind) {
    case K::Fin: return "fin(" + std::to_string(t.fin) + ")";
    case K::Omega: return "omega";
    case K::OmegaStar: return "omega*";
    case K::Zeta: return "zeta";
    case K::Eta: return "eta";
    case K::Lambda: return "lambda";
    case K::Sum: {
      std::string s;
      for (size_t i = 0; i < t.sub.size(); ++i) {
        if (i) s += " + ";
        s += term_text(t.sub[i], true, false);
      }
      if (parenInSum || parenInProd) return "(" + s + ")";
      return s;
    }
    case K::Prod: {
      std::string s = term_text(t.sub[0], false, true) + " * " +
                      term_text(t.sub[1], false, true);
      if (parenInProd) return "(" + s + ")";
      return s;
    }
  }
  return "?";
}

}  // namespace treecomp
