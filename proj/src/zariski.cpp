#include "gq/zariski.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gq {

namespace {

AnchoredSubgeometry perp_in_ambient(const Geometry& g, const AnchoredSubgeometry& ambient,
                                    int x) {
  AnchoredSubgeometry s;
  s.parent = &g;
  s.points = Bitset(g.num_points());
  s.lines = Bitset(g.num_lines());
  for (int l : g.lines_through(x))
    if (ambient.lines.test(l)) {
      s.lines.set(l);
      s.points |= g.line_bits(l);
    }
  s.points.set(x);
  return s;
}

}  // namespace

PrimalEnumeration primal_subgeometries(const Geometry& x, long long budget) {
  PrimalEnumeration pe;
  pe.X = &x;
  std::set<std::pair<Bitset, Bitset>> seen;
  auto push = [&](AnchoredSubgeometry s, PrimalKind k, int center) {
    if (s.points.count() == x.num_points() && s.lines.count() == x.num_lines())
      return;  // X itself is the generic point, not a proper prime here
    if (!seen.insert({s.points, s.lines}).second) return;
    pe.elems.push_back({std::move(s), k, center});
  };

  for (int p = 0; p < x.num_points(); ++p) {
    AnchoredSubgeometry s;
    s.parent = &x;
    s.points = Bitset(x.num_points());
    s.points.set(p);
    s.lines = Bitset(x.num_lines());
    push(std::move(s), PrimalKind::OrdinaryPoint, -1);
  }
  for (int l = 0; l < x.num_lines(); ++l) {
    AnchoredSubgeometry s;
    s.parent = &x;
    s.points = x.line_bits(l);
    s.lines = Bitset(x.num_lines());
    s.lines.set(l);
    push(std::move(s), PrimalKind::FullLine, -1);
  }

  std::vector<AnchoredSubgeometry> grids = full_grids(x);
  SubGqSearch subs = thick_full_subgqs(x, 1 << 20, budget);
  pe.exhaustive = subs.exhaustive;

  // ideal perps of full subquadrangles: X itself, full grids, thick full subGQs
  std::vector<const AnchoredSubgeometry*> ambients;
  AnchoredSubgeometry whole = AnchoredSubgeometry::whole(x);
  ambients.push_back(&whole);
  for (auto& g : grids) ambients.push_back(&g);
  for (auto& s : subs.thick) ambients.push_back(&s);
  for (const AnchoredSubgeometry* amb : ambients) {
    std::vector<int> pts = amb->points.to_vector();
    for (int p : pts) {
      AnchoredSubgeometry perp = perp_in_ambient(x, *amb, p);
      if (perp.lines.count() < 2) continue;  // single lines dedupe as FullLine
      push(std::move(perp), PrimalKind::PerpInFullSub, p);
    }
  }

  for (auto& g : grids) push(g, PrimalKind::FullGrid, -1);
  for (auto& s : subs.thick) {
    Geometry ind = s.induced();
    auto ord = detect_order(ind);
    if (ord && !(ord->s == 2 && ord->t == 2))  // the (2,2) exclusion
      push(s, PrimalKind::ThickFullSubGQ, -1);
  }
  return pe;
}

bool is_primal_geometry(const Geometry& g) {
  if (g.num_points() == 0 && g.num_lines() == 0) return true;  // the empty prime
  if (!check_axiom3(g).pass) return false;
  // single full line, with whatever classification tag it carries
  if (g.num_lines() == 1 && g.line_size(0) == g.num_points()) return true;
  Axiom3TypeTag tag = classify_axiom3_type(g);
  switch (tag.kind) {
    case Axiom3TypeTag::PointSet: return g.num_points() == 1;
    case Axiom3TypeTag::Perp: return true;
    case Axiom3TypeTag::Grid:
    case Axiom3TypeTag::ThinGQ_S1: return true;  // full grids of themselves
    case Axiom3TypeTag::ThickGQ: return !(tag.a == 2 && tag.b == 2);
    default: return false;
  }
}

std::optional<AnchoredSubgeometry> generic_point(const Geometry& x) {
  if (is_primal_geometry(x)) return AnchoredSubgeometry::whole(x);
  return std::nullopt;
}

IdealSubgeometry make_ideal(const AnchoredSubgeometry& s) {
  require(s.all_lines_full(), Err::NotIdeal, "ideal subgeometries have only full lines");
  return IdealSubgeometry{s};
}

bool closed_membership(const AnchoredSubgeometry& prime, const IdealSubgeometry& s) {
  return s.sub.contains(prime);
}

ClosedSet closed_set(const PrimalEnumeration& pe, const IdealSubgeometry& s) {
  ClosedSet c;
  for (size_t i = 0; i < pe.elems.size(); ++i)
    if (closed_membership(pe.elems[i].sub, s)) c.members.push_back(int(i));
  return c;
}

namespace {

struct ChainDp {
  const Geometry* x;
  const PrimalEnumeration* pe;
  const AnchoredSubgeometry* removed;  // nullptr for PROJ

  std::vector<int> lp;    // longest chain length ending at element
  std::vector<int> pred;  // argmax predecessor

  bool usable(const PrimalElement& e) const {
    if (!removed) return true;
    return !(e.sub.points.subset_of(removed->points) && e.sub.lines.subset_of(removed->lines));
  }
  // strict growth of the trace in the subspace
  bool trace_grows(const AnchoredSubgeometry& small, const AnchoredSubgeometry& big) const {
    if (!removed) return true;
    Bitset dp = big.points;
    dp.subtract(small.points);
    dp.subtract(removed->points);
    if (dp.any()) return true;
    Bitset dl = big.lines;
    dl.subtract(small.lines);
    dl.subtract(removed->lines);
    return dl.any();
  }

  void relax(int from, int to) {
    if (lp[from] + 1 > lp[to]) {
      lp[to] = lp[from] + 1;
      pred[to] = from;
    }
  }

  KrullResult run() {
    const auto& es = pe->elems;
    int n = int(es.size());
    lp.assign(n + 1, 0);  // n = virtual top (X itself)
    pred.assign(n + 1, -1);
    std::vector<char> ok(n, 0);
    for (int i = 0; i < n; ++i) ok[i] = usable(es[i]);

    // index points, lines, perps by centre
    std::map<int, std::vector<int>> perp_by_centre;
    std::vector<int> grids, subsq, lines, points;
    for (int i = 0; i < n; ++i) {
      if (!ok[i]) continue;
      switch (es[i].kind) {
        case PrimalKind::OrdinaryPoint: points.push_back(i); break;
        case PrimalKind::FullLine: lines.push_back(i); break;
        case PrimalKind::PerpInFullSub: perp_by_centre[es[i].center].push_back(i); break;
        case PrimalKind::FullGrid: grids.push_back(i); break;
        case PrimalKind::ThickFullSubGQ: subsq.push_back(i); break;
        default: break;
      }
    }
    for (int i : points) lp[i] = 0;
    for (int i : lines) {
      lp[i] = 0;
      // a surviving point on the line
      for (int p : points)
        if (es[p].sub.points.subset_of(es[i].sub.points) && trace_grows(es[p].sub, es[i].sub))
          relax(p, i);
    }
    for (auto& [c, list] : perp_by_centre) {
      // lines inside
      for (int i : list)
        for (int l : lines)
          if (es[l].sub.lines.subset_of(es[i].sub.lines) &&
              es[l].sub.points.subset_of(es[i].sub.points) && trace_grows(es[l].sub, es[i].sub))
            relax(l, i);
      // nested perps at the same centre
      for (int i : list)
        for (int j : list)
          if (i != j && es[i].sub.lines.subset_of(es[j].sub.lines) &&
              es[i].sub.points.subset_of(es[j].sub.points) &&
              es[i].sub.lines != es[j].sub.lines && trace_grows(es[i].sub, es[j].sub))
            relax(i, j);
    }
    auto contained = [&](int i, int j) {
      return es[i].sub.points.subset_of(es[j].sub.points) &&
             es[i].sub.lines.subset_of(es[j].sub.lines) && !(es[i].sub == es[j].sub);
    };
    for (int gidx : grids) {
      for (int l : lines)
        if (contained(l, gidx) && trace_grows(es[l].sub, es[gidx].sub)) relax(l, gidx);
      es[gidx].sub.points.for_each([&](int pt) {
        auto it = perp_by_centre.find(pt);
        if (it == perp_by_centre.end()) return;
        for (int i : it->second)
          if (contained(i, gidx) && trace_grows(es[i].sub, es[gidx].sub)) relax(i, gidx);
      });
    }
    for (int sidx : subsq) {
      for (int l : lines)
        if (contained(l, sidx) && trace_grows(es[l].sub, es[sidx].sub)) relax(l, sidx);
      es[sidx].sub.points.for_each([&](int pt) {
        auto it = perp_by_centre.find(pt);
        if (it == perp_by_centre.end()) return;
        for (int i : it->second)
          if (contained(i, sidx) && trace_grows(es[i].sub, es[sidx].sub)) relax(i, sidx);
      });
      for (int gidx : grids)
        if (contained(gidx, sidx) && trace_grows(es[gidx].sub, es[sidx].sub)) relax(gidx, sidx);
      for (int o : subsq)
        if (o != sidx && contained(o, sidx) && trace_grows(es[o].sub, es[sidx].sub))
          relax(o, sidx);
    }
    // the whole geometry closes every chain
    AnchoredSubgeometry whole = AnchoredSubgeometry::whole(*x);
    for (int i = 0; i < n; ++i)
      if (ok[i] && trace_grows(es[i].sub, whole)) relax(i, n);

    KrullResult res;
    res.dimension = lp[n];
    int cur = n;
    std::vector<AnchoredSubgeometry> chain{whole};
    while (pred[cur] >= 0) {
      cur = pred[cur];
      chain.push_back(es[cur].sub);
    }
    std::reverse(chain.begin(), chain.end());
    res.chain.elements = chain;
    res.exact = pe->exhaustive;
    return res;
  }
};

}  // namespace

KrullResult krull_dimension(const Geometry& x, long long budget) {
  PrimalEnumeration pe = primal_subgeometries(x, budget);
  ChainDp dp{&x, &pe, nullptr, {}, {}};
  return dp.run();
}

SpecView SpecView::proj(const Geometry& x) {
  SpecView v;
  v.x_ = &x;
  v.kind_ = SpecKind::PROJ;
  v.prim_ = primal_subgeometries(x);
  return v;
}

SpecView SpecView::aff(const Geometry& x, const AnchoredSubgeometry& hyperplane) {
  require(is_geometric_hyperplane(x, hyperplane), Err::NotAHyperplane,
          "AFF views remove a geometric hyperplane");
  SpecView v;
  v.x_ = &x;
  v.kind_ = SpecKind::AFF;
  v.removed_ = hyperplane;
  v.has_removed_ = true;
  v.prim_ = primal_subgeometries(x);
  return v;
}

SpecView SpecView::quas(const Geometry& x, const AnchoredSubgeometry& closed) {
  make_ideal(closed);  // validates
  SpecView v;
  v.x_ = &x;
  v.kind_ = SpecKind::QUAS;
  v.removed_ = closed;
  v.has_removed_ = true;
  v.prim_ = primal_subgeometries(x);
  return v;
}

std::vector<int> SpecView::surviving_primes() const {
  std::vector<int> out;
  for (size_t i = 0; i < prim_.elems.size(); ++i) {
    const auto& e = prim_.elems[i];
    if (!has_removed_ ||
        !(e.sub.points.subset_of(removed_.points) && e.sub.lines.subset_of(removed_.lines)))
      out.push_back(int(i));
  }
  return out;
}

bool SpecView::has_generic_point() const {
  if (!has_removed_) return is_primal_geometry(*x_);
  return remnant_irreducible();
}

KrullResult SpecView::dimension(long long budget) const {
  PrimalEnumeration pe = primal_subgeometries(*x_, budget);
  ChainDp dp{x_, &pe, has_removed_ ? &removed_ : nullptr, {}, {}};
  return dp.run();
}

Geometry SpecView::remnant() const {
  if (!has_removed_) {
    Geometry copy = *x_;
    return copy;
  }
  return remove_closed(*x_, removed_);
}

bool SpecView::remnant_irreducible() const { return is_primal_geometry(remnant()); }

}  // namespace gq
