#pragma once

#include <functional>

#include "treecomp/coord.hpp"

namespace treecomp {

/// Result of normalizing a term: the canonical term plus translators that
/// carry element coordinates and sub-term positions of the original into it.
/// A position may map to several positions (a spliced Sum, a distributed
/// Prod), hence the vector.
struct TermNorm {
  LinearTerm term;
  std::function<Coord(const Coord&)> xc;
  std::function<std::vector<Position>(const Position&)> xp;

  static TermNorm identity(LinearTerm t) {
    TermNorm n;
    n.term = std::move(t);
    n.xc = [](const Coord& c) { return c; };
    n.xp = [](const Position& p) { return std::vector<Position>{p}; };
    return n;
  }
};

/// Normal form: Sums are flat with merged adjacent Fin parts and >= 2 parts;
/// Prod indices are infinite primitives (Fin indices expand, Sum indices
/// distribute, Prod indices reassociate to the base).
inline TermNorm normalize_term_x(const LinearTerm& t);

namespace detail {

inline TermNorm compose(TermNorm first, TermNorm second) {
  TermNorm out;
  out.term = second.term;
  auto f1 = first.xc; auto f2 = second.xc;
  out.xc = [f1, f2](const Coord& c) { return f2(f1(c)); };
  auto p1 = first.xp; auto p2 = second.xp;
  out.xp = [p1, p2](const Position& p) {
    std::vector<Position> mid = p1(p), fin;
    for (const auto& m : mid)
      for (auto& r : p2(m)) fin.push_back(std::move(r));
    return fin;
  };
  return out;
}

inline TermNorm normalize_sum(std::vector<TermNorm> kids) {
  // Splice parts that are themselves Sums.
  struct Slot { int lIndex; int len; };          // child j occupies L[lIndex .. lIndex+len)
  std::vector<Slot> slots;
  std::vector<LinearTerm> L;
  for (auto& k : kids) {
    Slot s{static_cast<int>(L.size()), 1};
    if (k.term.kind == LinearTerm::Kind::Sum) {
      s.len = static_cast<int>(k.term.sub.size());
      for (auto& p : k.term.sub) L.push_back(p);
    } else {
      L.push_back(k.term);
    }
    slots.push_back(s);
  }
  // Merge adjacent Fin runs.
  std::vector<LinearTerm> F;
  std::vector<int> fIndex(L.size());
  std::vector<std::int64_t> finOff(L.size(), 0);
  for (size_t i = 0; i < L.size(); ++i) {
    if (L[i].kind == LinearTerm::Kind::Fin && !F.empty() &&
        F.back().kind == LinearTerm::Kind::Fin) {
      finOff[i] = F.back().fin;
      F.back().fin += L[i].fin;
      fIndex[i] = static_cast<int>(F.size()) - 1;
    } else {
      fIndex[i] = static_cast<int>(F.size());
      F.push_back(L[i]);
    }
  }
  bool collapse = F.size() == 1;
  LinearTerm outTerm = collapse ? F[0] : LinearTerm::Sum(F);

  TermNorm out;
  out.term = outTerm;
  out.xc = [kids, slots, fIndex, finOff, collapse](const Coord& c) {
    int j = c.part;
    Coord inner = kids[j].xc(c.sub[0]);
    int li;
    Coord atL;
    if (kids[j].term.kind == LinearTerm::Kind::Sum) {
      li = slots[j].lIndex + inner.part;
      atL = inner.sub[0];
    } else {
      li = slots[j].lIndex;
      atL = inner;
    }
    Coord adj = atL;
    if (finOff[li] != 0) adj = Coord::finIdx(finOff[li] + atL.i);
    if (collapse) return adj;
    return Coord::sumPart(fIndex[li], adj);
  };
  out.xp = [kids, slots, fIndex, collapse](const Position& p) -> std::vector<Position> {
    std::vector<Position> res;
    if (p.empty()) { res.push_back({}); return res; }
    int j = p[0].part;
    Position rest(p.begin() + 1, p.end());
    for (const auto& r : kids[j].xp(rest)) {
      std::vector<std::pair<int, Position>> loc;  // (L index, tail)
      if (kids[j].term.kind == LinearTerm::Kind::Sum) {
        if (r.empty()) {
          for (int u = 0; u < slots[j].len; ++u) loc.emplace_back(slots[j].lIndex + u, Position{});
        } else {
          loc.emplace_back(slots[j].lIndex + r[0].part, Position(r.begin() + 1, r.end()));
        }
      } else {
        loc.emplace_back(slots[j].lIndex, r);
      }
      for (auto& [li, tail] : loc) {
        Position q;
        if (!collapse) q.push_back(stepPart(fIndex[li]));
        q.insert(q.end(), tail.begin(), tail.end());
        res.push_back(std::move(q));
      }
    }
    return res;
  };
  return out;
}

}  // namespace detail

inline TermNorm normalize_term_x(const LinearTerm& t) {
  using K = LinearTerm::Kind;
  if (t.isPrimitive()) return TermNorm::identity(t);

  if (t.kind == K::Sum) {
    std::vector<TermNorm> kids;
    kids.reserve(t.sub.size());
    for (const auto& p : t.sub) kids.push_back(normalize_term_x(p));
    return detail::normalize_sum(std::move(kids));
  }

  // Prod
  TermNorm nb = normalize_term_x(t.sub[0]);
  TermNorm ni = normalize_term_x(t.sub[1]);
  LinearTerm b = nb.term, i = ni.term;

  TermNorm entry;  // (coord/pos of original Prod) -> (Prod of normalized children)
  entry.term = LinearTerm::Prod(b, i);
  entry.xc = [nb, ni](const Coord& c) {
    return Coord::prodPair(ni.xc(c.sub[0]), nb.xc(c.sub[1]));
  };
  entry.xp = [nb](const Position& p) -> std::vector<Position> {
    std::vector<Position> res;
    if (p.empty()) { res.push_back({}); return res; }
    // selectors never step through Idx, so the head is Base
    Position rest(p.begin() + 1, p.end());
    for (const auto& r : nb.xp(rest)) {
      Position q{stepBase()};
      q.insert(q.end(), r.begin(), r.end());
      res.push_back(std::move(q));
    }
    return res;
  };

  // Root rewrites on Prod(b, i), each followed by full renormalization.
  if (i.kind == K::Fin && i.fin == 1) {
    TermNorm step;
    step.term = b;
    step.xc = [](const Coord& c) { return c.sub[1]; };
    step.xp = [](const Position& p) -> std::vector<Position> {
      if (p.empty()) return {Position{}};
      return {Position(p.begin() + 1, p.end())};
    };
    return detail::compose(std::move(entry),
                           detail::compose(std::move(step), normalize_term_x(b)));
  }
  if (b.kind == K::Fin && b.fin == 1) {
    TermNorm step;
    step.term = i;
    step.xc = [](const Coord& c) { return c.sub[0]; };
    step.xp = [](const Position& p) -> std::vector<Position> {
      if (p.empty()) return {Position{}};
      return {};  // base vanished; finite selectors are expanded beforehand
    };
    return detail::compose(std::move(entry),
                           detail::compose(std::move(step), normalize_term_x(i)));
  }
  if (i.kind == K::Fin) {
    int k = i.fin;
    std::vector<LinearTerm> parts(k, b);
    TermNorm step;
    step.term = LinearTerm::Sum(parts);
    step.xc = [](const Coord& c) {
      return Coord::sumPart(static_cast<int>(c.sub[0].i), c.sub[1]);
    };
    step.xp = [k](const Position& p) -> std::vector<Position> {
      std::vector<Position> res;
      if (p.empty()) { res.push_back({}); return res; }
      Position rest(p.begin() + 1, p.end());
      for (int j = 0; j < k; ++j) {
        Position q{stepPart(j)};
        q.insert(q.end(), rest.begin(), rest.end());
        res.push_back(std::move(q));
      }
      return res;
    };
    return detail::compose(std::move(entry),
                           detail::compose(std::move(step), normalize_term_x(step.term)));
  }
  if (i.kind == K::Sum) {
    std::vector<LinearTerm> parts;
    parts.reserve(i.sub.size());
    for (const auto& ii : i.sub) parts.push_back(LinearTerm::Prod(b, ii));
    int k = static_cast<int>(parts.size());
    TermNorm step;
    step.term = LinearTerm::Sum(parts);
    step.xc = [](const Coord& c) {
      const Coord& ci = c.sub[0];  // sumPart(j, innerIdx)
      return Coord::sumPart(ci.part, Coord::prodPair(ci.sub[0], c.sub[1]));
    };
    step.xp = [k](const Position& p) -> std::vector<Position> {
      std::vector<Position> res;
      if (p.empty()) {
        for (int j = 0; j < k; ++j) res.push_back({stepPart(j)});
        return res;
      }
      // [Base, rest] -> every part's [Part(j), Base, rest]
      Position rest(p.begin() + 1, p.end());
      for (int j = 0; j < k; ++j) {
        Position q{stepPart(j), stepBase()};
        q.insert(q.end(), rest.begin(), rest.end());
        res.push_back(std::move(q));
      }
      return res;
    };
    return detail::compose(std::move(entry),
                           detail::compose(std::move(step), normalize_term_x(step.term)));
  }
  if (i.kind == K::Prod) {
    // b * (ib * ii)  ==  (b * ib) * ii
    LinearTerm ib = i.sub[0], ii = i.sub[1];
    TermNorm step;
    step.term = LinearTerm::Prod(LinearTerm::Prod(b, ib), ii);
    step.xc = [](const Coord& c) {
      const Coord& ci = c.sub[0];  // prodPair(outerIdx over ii, innerIdx over ib)
      return Coord::prodPair(ci.sub[0], Coord::prodPair(ci.sub[1], c.sub[1]));
    };
    step.xp = [](const Position& p) -> std::vector<Position> {
      if (p.empty()) return {Position{}};
      Position q{stepBase(), stepBase()};
      q.insert(q.end(), p.begin() + 1, p.end());
      return {q};
    };
    return detail::compose(std::move(entry),
                           detail::compose(std::move(step), normalize_term_x(step.term)));
  }
  return entry;  // index is an infinite primitive
}

inline LinearTerm normalize_term(const LinearTerm& t) { return normalize_term_x(t).term; }

}  // namespace treecomp
