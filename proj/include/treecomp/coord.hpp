#pragma once

#include <optional>
#include <string>

#include "treecomp/linear_term.hpp"
#include "treecomp/rational.hpp"

namespace treecomp {

/// Address of one element inside a LinearTerm. Mirrors the term structure:
/// scalars at primitives, (part, inner) at a Sum, (index, base) at a Prod.
/// Lambda admits no Coord.
struct Coord {
  enum class Kind { FinIdx, Nat, NonPos, Int, Rat, SumPart, ProdPair };
  Kind kind = Kind::FinIdx;
  std::int64_t i = 0;       // FinIdx (0-based), Nat (>=0), NonPos (<=0), Int
  Rational q;               // Rat
  int part = 0;             // SumPart (0-based)
  std::vector<Coord> sub;   // SumPart: {inner}; ProdPair: {indexCoord, baseCoord}

  static Coord finIdx(std::int64_t v) { Coord c; c.kind = Kind::FinIdx; c.i = v; return c; }
  static Coord nat(std::int64_t v) { Coord c; c.kind = Kind::Nat; c.i = v; return c; }
  static Coord nonPos(std::int64_t v) { Coord c; c.kind = Kind::NonPos; c.i = v; return c; }
  static Coord intg(std::int64_t v) { Coord c; c.kind = Kind::Int; c.i = v; return c; }
  static Coord rat(Rational r) { Coord c; c.kind = Kind::Rat; c.q = r; return c; }
  static Coord sumPart(int p, Coord inner) {
    Coord c; c.kind = Kind::SumPart; c.part = p; c.sub = {std::move(inner)}; return c;
  }
  static Coord prodPair(Coord idx, Coord base) {
    Coord c; c.kind = Kind::ProdPair; c.sub = {std::move(idx), std::move(base)}; return c;
  }

  friend bool operator==(const Coord& a, const Coord& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::Rat: return a.q == b.q;
      case Kind::SumPart: return a.part == b.part && a.sub == b.sub;
      case Kind::ProdPair: return a.sub == b.sub;
      default: return a.i == b.i;
    }
  }
  friend bool operator!=(const Coord& a, const Coord& b) { return !(a == b); }
};

enum class Cmp { LT, EQ, GT };

/// Steps of a Position (path to a sub-term): Sum part, Prod base, Prod index.
struct PosStep {
  enum class K { Part, Base, Idx };
  K k = K::Part;
  int part = 0;
  friend bool operator==(const PosStep& a, const PosStep& b) {
    return a.k == b.k && (a.k != K::Part || a.part == b.part);
  }
};
using Position = std::vector<PosStep>;

inline PosStep stepPart(int j) { PosStep s; s.k = PosStep::K::Part; s.part = j; return s; }
inline PosStep stepBase() { PosStep s; s.k = PosStep::K::Base; return s; }
inline PosStep stepIdx() { PosStep s; s.k = PosStep::K::Idx; return s; }

/// Sub-term at a position; nullptr when the path does not fit the term.
inline const LinearTerm* subterm_at(const LinearTerm& t, const Position& p, size_t from = 0) {
  const LinearTerm* cur = &t;
  for (size_t k = from; k < p.size(); ++k) {
    const PosStep& s = p[k];
    switch (s.k) {
      case PosStep::K::Part:
        if (cur->kind != LinearTerm::Kind::Sum || s.part < 0 ||
            s.part >= static_cast<int>(cur->sub.size()))
          return nullptr;
        cur = &cur->sub[s.part];
        break;
      case PosStep::K::Base:
        if (cur->kind != LinearTerm::Kind::Prod) return nullptr;
        cur = &cur->sub[0];
        break;
      case PosStep::K::Idx:
        if (cur->kind != LinearTerm::Kind::Prod) return nullptr;
        cur = &cur->sub[1];
        break;
    }
  }
  return cur;
}

inline bool coord_valid(const LinearTerm& t, const Coord& c) {
  using TK = LinearTerm::Kind;
  using CK = Coord::Kind;
  switch (t.kind) {
    case TK::Fin: return c.kind == CK::FinIdx && c.i >= 0 && c.i < t.fin;
    case TK::Omega: return c.kind == CK::Nat && c.i >= 0;
    case TK::OmegaStar: return c.kind == CK::NonPos && c.i <= 0;
    case TK::Zeta: return c.kind == CK::Int;
    case TK::Eta: return c.kind == CK::Rat;
    case TK::Lambda: return false;  // never addressable
    case TK::Sum:
      return c.kind == CK::SumPart && c.part >= 0 &&
             c.part < static_cast<int>(t.sub.size()) && c.sub.size() == 1 &&
             coord_valid(t.sub[c.part], c.sub[0]);
    case TK::Prod:
      return c.kind == CK::ProdPair && c.sub.size() == 2 &&
             coord_valid(t.sub[1], c.sub[0]) && coord_valid(t.sub[0], c.sub[1]);
  }
  return false;
}

/// Total order on valid coordinates of one term (index-major for Prod).
inline Cmp compare_coords(const LinearTerm& t, const Coord& a, const Coord& b) {
  using TK = LinearTerm::Kind;
  switch (t.kind) {
    case TK::Sum: {
      if (a.part != b.part) return a.part < b.part ? Cmp::LT : Cmp::GT;
      return compare_coords(t.sub[a.part], a.sub[0], b.sub[0]);
    }
    case TK::Prod: {
      Cmp ci = compare_coords(t.sub[1], a.sub[0], b.sub[0]);
      if (ci != Cmp::EQ) return ci;
      return compare_coords(t.sub[0], a.sub[1], b.sub[1]);
    }
    case TK::Eta:
      if (a.q == b.q) return Cmp::EQ;
      return a.q < b.q ? Cmp::LT : Cmp::GT;
    default:
      if (a.i == b.i) return Cmp::EQ;
      return a.i < b.i ? Cmp::LT : Cmp::GT;
  }
}

/// Position of the primitive block a coordinate lives in.
inline Position coord_block(const LinearTerm& t, const Coord& c) {
  using TK = LinearTerm::Kind;
  if (t.kind == TK::Sum) {
    Position p = {stepPart(c.part)};
    Position rest = coord_block(t.sub[c.part], c.sub[0]);
    p.insert(p.end(), rest.begin(), rest.end());
    return p;
  }
  if (t.kind == TK::Prod) {
    Position p = {stepBase()};
    Position rest = coord_block(t.sub[0], c.sub[1]);
    p.insert(p.end(), rest.begin(), rest.end());
    return p;
  }
  return {};
}

/// Dotted text: Sum "part.inner" (1-based part), Prod "index.base",
/// rationals "p/q", integers elsewhere.
inline std::string coord_text(const LinearTerm& t, const Coord& c) {
  using TK = LinearTerm::Kind;
  switch (t.kind) {
    case TK::Sum:
      return std::to_string(c.part + 1) + "." + coord_text(t.sub[c.part], c.sub[0]);
    case TK::Prod:
      return coord_text(t.sub[1], c.sub[0]) + "." + coord_text(t.sub[0], c.sub[1]);
    case TK::Eta: return c.q.str();
    default: return std::to_string(c.i);
  }
}

inline std::string pos_text(const Position& p) {
  std::string s;
  for (const auto& st : p) {
    if (!s.empty()) s += ".";
    switch (st.k) {
      case PosStep::K::Part: s += std::to_string(st.part + 1); break;
      case PosStep::K::Base: s += "base"; break;
      case PosStep::K::Idx: s += "idx"; break;
    }
  }
  return s.empty() ? "." : s;
}

/// Least / greatest element of a term, when they exist.
inline std::optional<Coord> term_min(const LinearTerm& t);
inline std::optional<Coord> term_max(const LinearTerm& t);

inline std::optional<Coord> term_min(const LinearTerm& t) {
  using TK = LinearTerm::Kind;
  switch (t.kind) {
    case TK::Fin: return Coord::finIdx(0);
    case TK::Omega: return Coord::nat(0);
    case TK::OmegaStar: case TK::Zeta: case TK::Eta: case TK::Lambda: return std::nullopt;
    case TK::Sum: {
      auto m = term_min(t.sub[0]);
      if (!m) return std::nullopt;
      return Coord::sumPart(0, *m);
    }
    case TK::Prod: {
      auto mi = term_min(t.sub[1]);
      auto mb = term_min(t.sub[0]);
      if (!mi || !mb) return std::nullopt;
      return Coord::prodPair(*mi, *mb);
    }
  }
  return std::nullopt;
}

inline std::optional<Coord> term_max(const LinearTerm& t) {
  using TK = LinearTerm::Kind;
  switch (t.kind) {
    case TK::Fin: return Coord::finIdx(t.fin - 1);
    case TK::OmegaStar: return Coord::nonPos(0);
    case TK::Omega: case TK::Zeta: case TK::Eta: case TK::Lambda: return std::nullopt;
    case TK::Sum: {
      auto m = term_max(t.sub.back());
      if (!m) return std::nullopt;
      return Coord::sumPart(static_cast<int>(t.sub.size()) - 1, *m);
    }
    case TK::Prod: {
      auto mi = term_max(t.sub[1]);
      auto mb = term_max(t.sub[0]);
      if (!mi || !mb) return std::nullopt;
      return Coord::prodPair(*mi, *mb);
    }
  }
  return std::nullopt;
}

/// Immediate successor / predecessor of an element within its term, if any.
inline std::optional<Coord> coord_succ(const LinearTerm& t, const Coord& c) {
  using TK = LinearTerm::Kind;
  switch (t.kind) {
    case TK::Fin:
      if (c.i + 1 < t.fin) return Coord::finIdx(c.i + 1);
      return std::nullopt;
    case TK::Omega: return Coord::nat(c.i + 1);
    case TK::OmegaStar:
      if (c.i < 0) return Coord::nonPos(c.i + 1);
      return std::nullopt;
    case TK::Zeta: return Coord::intg(c.i + 1);
    case TK::Eta: case TK::Lambda: return std::nullopt;
    case TK::Sum: {
      auto s = coord_succ(t.sub[c.part], c.sub[0]);
      if (s) return Coord::sumPart(c.part, *s);
      auto mx = term_max(t.sub[c.part]);
      if (!mx || !(*mx == c.sub[0])) return std::nullopt;  // not at the top of its part
      if (c.part + 1 < static_cast<int>(t.sub.size())) {
        auto m = term_min(t.sub[c.part + 1]);
        if (m) return Coord::sumPart(c.part + 1, *m);
      }
      return std::nullopt;
    }
    case TK::Prod: {
      auto sb = coord_succ(t.sub[0], c.sub[1]);
      if (sb) return Coord::prodPair(c.sub[0], *sb);
      auto mx = term_max(t.sub[0]);
      if (!mx || !(*mx == c.sub[1])) return std::nullopt;
      auto si = coord_succ(t.sub[1], c.sub[0]);
      auto mb = term_min(t.sub[0]);
      if (si && mb) return Coord::prodPair(*si, *mb);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::optional<Coord> coord_pred(const LinearTerm& t, const Coord& c) {
  using TK = LinearTerm::Kind;
  switch (t.kind) {
    case TK::Fin:
      if (c.i > 0) return Coord::finIdx(c.i - 1);
      return std::nullopt;
    case TK::Omega:
      if (c.i > 0) return Coord::nat(c.i - 1);
      return std::nullopt;
    case TK::OmegaStar: return Coord::nonPos(c.i - 1);
    case TK::Zeta: return Coord::intg(c.i - 1);
    case TK::Eta: case TK::Lambda: return std::nullopt;
    case TK::Sum: {
      auto s = coord_pred(t.sub[c.part], c.sub[0]);
      if (s) return Coord::sumPart(c.part, *s);
      auto mn = term_min(t.sub[c.part]);
      if (!mn || !(*mn == c.sub[0])) return std::nullopt;
      if (c.part > 0) {
        auto m = term_max(t.sub[c.part - 1]);
        if (m) return Coord::sumPart(c.part - 1, *m);
      }
      return std::nullopt;
    }
    case TK::Prod: {
      auto pb = coord_pred(t.sub[0], c.sub[1]);
      if (pb) return Coord::prodPair(c.sub[0], *pb);
      auto mn = term_min(t.sub[0]);
      if (!mn || !(*mn == c.sub[1])) return std::nullopt;
      auto pi = coord_pred(t.sub[1], c.sub[0]);
      auto mb = term_max(t.sub[0]);
      if (pi && mb) return Coord::prodPair(*pi, *mb);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace treecomp
