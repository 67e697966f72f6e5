#include "gq/ideas.hpp"

namespace gq {

bool idea1_isomorphic(const AnchoredSubgeometry& a, const AnchoredSubgeometry& b) {
  if (a.points.count() != b.points.count() || a.lines.count() != b.lines.count()) return false;
  if (a.parent->num_points() != b.parent->num_points() ||
      a.parent->num_lines() != b.parent->num_lines())
    return false;
  CanonicalCertificate ca = canonical_form_marked(*a.parent, a.points, a.lines);
  CanonicalCertificate cb = canonical_form_marked(*b.parent, b.points, b.lines);
  return ca == cb;
}

bool idea1_isomorphic_lines(const Geometry& x, int line_x, const Geometry& y, int line_y,
                            long long budget) {
  if (x.line_size(line_x) != y.line_size(line_y)) return false;
  auto host_certs = [&](const Geometry& g, int line) {
    std::vector<std::string> certs;
    std::vector<AnchoredSubgeometry> hosts;
    if (is_thick(g)) hosts.push_back(AnchoredSubgeometry::whole(g));
    for (auto& s : thick_full_subgqs(g, 1 << 16, budget).thick)
      if (s.lines.test(line)) hosts.push_back(s);
    for (const auto& h : hosts) {
      std::vector<int> pmap, lmap;
      Geometry ind = h.induced(&pmap, &lmap);
      // locate the line inside the host
      int inner = -1;
      for (size_t i = 0; i < lmap.size(); ++i)
        if (lmap[i] == line) inner = int(i);
      if (inner < 0) continue;
      Bitset mpts(ind.num_points());
      for (int p : ind.line_points(inner)) mpts.set(p);
      Bitset mlines(ind.num_lines());
      mlines.set(inner);
      certs.push_back(canonical_form_marked(ind, mpts, mlines).bytes);
    }
    return certs;
  };
  auto cx = host_certs(x, line_x);
  auto cy = host_certs(y, line_y);
  for (const auto& a : cx)
    for (const auto& b : cy)
      if (a == b) return true;
  return false;
}

bool idea2_isomorphic(const AnchoredSubgeometry& a, const PermGroup& aut_a,
                      const AnchoredSubgeometry& b, const PermGroup& aut_b) {
  if (a.points.count() != b.points.count() || a.lines.count() != b.lines.count()) return false;
  auto induced_of = [](const AnchoredSubgeometry& s, const PermGroup& aut) {
    std::vector<int> elements;
    s.points.for_each([&](int p) { elements.push_back(p); });
    s.lines.for_each([&](int l) { elements.push_back(s.parent->num_points() + l); });
    PermGroup stab = aut.setwise_stabilizer(elements);
    return stab.induced_action(elements).first;
  };
  PermGroup ga = induced_of(a, aut_a);
  PermGroup gb = induced_of(b, aut_b);
  return perm_equivalent(ga, gb).has_value();
}

bool p_trace_isomorphic(const AnchoredSubgeometry& a, const AnchoredSubgeometry& b) {
  TraceGeometry ta = trace_geometry(a);
  TraceGeometry tb = trace_geometry(b);
  if (ta.base_type != tb.base_type) return false;
  Bitset none_a(ta.geom.num_points()), nolines_a(ta.geom.num_lines());
  Bitset none_b(tb.geom.num_points()), nolines_b(tb.geom.num_lines());
  auto ca = canonical_form_marked(ta.geom, none_a, nolines_a, &ta.line_type);
  auto cb = canonical_form_marked(tb.geom, none_b, nolines_b, &tb.line_type);
  return ca == cb;
}

bool trace_isomorphic(const AnchoredSubgeometry& a, const AnchoredSubgeometry& b) {
  TraceGeometry ta = trace_geometry(a);
  TraceGeometry tb = trace_geometry(b);
  return are_isomorphic(ta.geom, tb.geom).has_value();
}

}  // namespace gq
