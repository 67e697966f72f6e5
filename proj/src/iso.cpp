#include "gq/iso.hpp"

#include <algorithm>

namespace gq {

ColoredGraph incidence_graph(const Geometry& g) {
  ColoredGraph cg;
  cg.n = g.num_points() + g.num_lines();
  cg.color.assign(cg.n, 0);
  for (int l = 0; l < g.num_lines(); ++l) cg.color[g.num_points() + l] = 1;
  cg.adj.assign(cg.n, {});
  for (int l = 0; l < g.num_lines(); ++l)
    for (int p : g.line_points(l)) cg.add_edge(p, g.num_points() + l);
  return cg;
}

namespace {

CanonicalCertificate finish(const Geometry& g, const CanonResult& res) {
  CanonicalCertificate cert;
  cert.bytes = res.certificate;
  cert.hash = fnv1a(cert.bytes);
  cert.point_pos.resize(g.num_points());
  cert.line_pos.resize(g.num_lines());
  for (int p = 0; p < g.num_points(); ++p) cert.point_pos[p] = res.canon_pos[p];
  for (int l = 0; l < g.num_lines(); ++l) cert.line_pos[l] = res.canon_pos[g.num_points() + l];
  return cert;
}

}  // namespace

CanonicalCertificate canonical_form(const Geometry& g) {
  return finish(g, canonical_label(incidence_graph(g)));
}

CanonicalCertificate canonical_form_marked(const Geometry& g, const Bitset& marked_points,
                                           const Bitset& marked_lines,
                                           const std::vector<int>* line_classes,
                                           const std::vector<int>* point_classes) {
  ColoredGraph cg = incidence_graph(g);
  for (int p = 0; p < g.num_points(); ++p) {
    int base = (marked_points.universe() && marked_points.test(p)) ? 2 : 0;
    if (point_classes) base += 4 * (*point_classes)[p];
    cg.color[p] = base;
  }
  for (int l = 0; l < g.num_lines(); ++l) {
    int base = (marked_lines.universe() && marked_lines.test(l)) ? 3 : 1;
    if (line_classes) base += 4 * (*line_classes)[l];
    cg.color[g.num_points() + l] = base;
  }
  return finish(g, canonical_label(cg));
}

std::optional<ElementMap> are_isomorphic(const Geometry& g, const Geometry& h) {
  if (g.num_points() != h.num_points() || g.num_lines() != h.num_lines()) return std::nullopt;
  CanonicalCertificate cg = canonical_form(g);
  CanonicalCertificate ch = canonical_form(h);
  if (!(cg == ch)) return std::nullopt;
  ElementMap m;
  m.point_map.assign(g.num_points(), -1);
  m.line_map.assign(g.num_lines(), -1);
  std::vector<int> h_point_at(g.num_points() + h.num_lines() + 1, -1);
  std::vector<int> h_line_at(g.num_points() + h.num_lines() + 1, -1);
  for (int p = 0; p < h.num_points(); ++p) h_point_at[ch.point_pos[p]] = p;
  for (int l = 0; l < h.num_lines(); ++l) h_line_at[ch.line_pos[l]] = l;
  for (int p = 0; p < g.num_points(); ++p) m.point_map[p] = h_point_at[cg.point_pos[p]];
  for (int l = 0; l < g.num_lines(); ++l) m.line_map[l] = h_line_at[cg.line_pos[l]];
  // verify the realized map is an isomorphism
  for (int l = 0; l < g.num_lines(); ++l) {
    std::vector<int> img;
    for (int p : g.line_points(l)) img.push_back(m.point_map[p]);
    std::sort(img.begin(), img.end());
    require(img == h.line_points(m.line_map[l]), Err::NotAxiom3,
            "internal: canonical map failed verification");
  }
  return m;
}

PermGroup automorphisms(const Geometry& g) {
  auto res = canonical_label(incidence_graph(g));
  return PermGroup(g.num_points() + g.num_lines(), res.generators);
}

std::pair<PermGroup, unsigned long long> stabilizer_induced(const Geometry& g,
                                                            const PermGroup& aut,
                                                            const std::vector<int>& elements) {
  (void)g;
  PermGroup setwise = aut.setwise_stabilizer(elements);
  return setwise.induced_action(elements);
}

AnchoredLine anchored_line(const Geometry& g, const PermGroup& aut, int line) {
  AnchoredLine al;
  al.line = line;
  al.points_on_line = g.line_size(line);
  PermGroup stab = aut.pointwise_stabilizer({g.num_points() + line});
  auto [induced, kernel] = stab.induced_action(g.line_points(line));
  al.induced = induced;
  al.kernel = kernel;
  return al;
}

bool idea2_isomorphic_lines(const AnchoredLine& a, const AnchoredLine& b) {
  if (a.points_on_line != b.points_on_line) return false;
  return perm_equivalent(a.induced, b.induced).has_value();
}

}  // namespace gq
