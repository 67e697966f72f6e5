#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gq/constructions.hpp"
#include "gq/ideas.hpp"
#include "gq/iso.hpp"
#include "gq/json_io.hpp"
#include "gq/motivic.hpp"
#include "gq/product.hpp"
#include "gq/ring.hpp"
#include "gq/subgeometry.hpp"
#include "gq/tower.hpp"
#include "gq/zariski.hpp"

namespace py = pybind11;
using namespace gq;

namespace {

py::dict order_dict(const Geometry& g) {
  py::dict d;
  if (auto ord = detect_order(g)) {
    d["s"] = ord->s;
    d["t"] = ord->t;
  }
  return d;
}

AnchoredSubgeometry sub_of(const Geometry& g, const std::vector<int>& pts,
                           const std::vector<int>& lines) {
  return AnchoredSubgeometry::of(g, pts, lines);
}

}  // namespace

PYBIND11_MODULE(_gqkit, m) {
  m.doc() = "finite generalized quadrangles: constructions, spectra and ring classes";

  py::register_exception<GqError>(m, "GqError");

  py::class_<Geometry>(m, "Geometry")
      .def_property_readonly("num_points", &Geometry::num_points)
      .def_property_readonly("num_lines", &Geometry::num_lines)
      .def("line_points", &Geometry::line_points, py::arg("line"))
      .def("lines_through", &Geometry::lines_through, py::arg("point"))
      .def("are_collinear", &Geometry::are_collinear, py::arg("p"), py::arg("q"))
      .def("__repr__", [](const Geometry& g) {
        return "<Geometry " + std::to_string(g.num_points()) + " points, " +
               std::to_string(g.num_lines()) + " lines>";
      });

  // constructions
  m.def("geometry", [](int points, const std::vector<std::vector<int>>& lines) {
    return Geometry::create(points, lines);
  });
  m.def("quadric_gq", &quadric_gq, py::arg("m"), py::arg("q"));
  m.def("wq", &wq, py::arg("q"));
  m.def("h3", &h3, py::arg("q"));
  m.def("grid", &grid_geometry, py::arg("u"), py::arg("v"));
  m.def("dual_grid", &dual_grid_geometry, py::arg("u"), py::arg("v"));
  m.def("perp_geometry", &perp_geometry, py::arg("t"), py::arg("points_per_line"));
  m.def("line", &line_geometry, py::arg("points"));
  m.def("point_set", &point_set_geometry, py::arg("points"));
  m.def("fano_plane", &fano_plane);
  m.def("t2_of_oval", [](const std::string& kind, int i, int h) {
    Oval o = (kind == "brown") ? brown_oval(h) : segre_oval(i, h);
    return t2_of_oval(o);
  }, py::arg("kind"), py::arg("i"), py::arg("h"));

  // axioms and classification
  m.def("check_axiom3", [](const Geometry& g) { return check_axiom3(g).pass; });
  m.def("check_axiom3_tilde", [](const Geometry& g) { return check_axiom3_tilde(g).pass; });
  m.def("detect_order", &order_dict);
  m.def("classify", [](const Geometry& g) { return classify_axiom3_type(g).name(); });
  m.def("dualize", &dualize);
  m.def("gq_count_identities", &gq_count_identities);

  // isomorphisms
  m.def("canonical_certificate",
        [](const Geometry& g) { return py::bytes(canonical_form(g).bytes); });
  m.def("are_isomorphic", [](const Geometry& a, const Geometry& b) -> py::object {
    auto res = are_isomorphic(a, b);
    if (!res) return py::none();
    py::dict d;
    d["point_map"] = res->point_map;
    d["line_map"] = res->line_map;
    return d;
  });
  m.def("automorphism_order",
        [](const Geometry& g) { return automorphisms(g).order(); });

  // substructures
  m.def("perp", [](const Geometry& g, int x) { return perp(g, x).to_vector(); });
  m.def("trace_pts", [](const Geometry& g, int x, int y) { return trace_set(g, x, y).to_vector(); });
  m.def("span_pts", [](const Geometry& g, int x, int y) { return span_set(g, x, y).to_vector(); });
  m.def("is_regular_line", &is_regular_line, py::arg("g"), py::arg("line"));
  m.def("full_grid_count", [](const Geometry& g) { return int(full_grids(g).size()); });
  m.def("ovoid_count", [](const Geometry& g) { return int(ovoids(g).size()); });
  m.def("thick_full_subgq_count", [](const Geometry& g) {
    auto res = thick_full_subgqs(g);
    return py::make_tuple(int(res.thick.size()), res.exhaustive);
  });
  m.def("decomposition_case", [](const Geometry& g) {
    auto v = decomposition_verdict(g);
    py::dict d;
    d["decomposable"] = v.decomposable;
    d["case"] = v.case_tag;
    d["exhaustive"] = v.exhaustive;
    return d;
  });
  m.def("remove_closed",
        [](const Geometry& g, const std::vector<int>& pts, const std::vector<int>& lines) {
          return remove_closed(g, sub_of(g, pts, lines));
        });
  m.def("trace_geometry_of_perp", [](const Geometry& g, int x) {
    AnchoredSubgeometry s;
    s.parent = &g;
    s.points = g.collinear(x);
    s.lines = Bitset(g.num_lines());
    for (int l : g.lines_through(x)) s.lines.set(l);
    return trace_geometry(s).geom;
  });

  // spectrum
  m.def("krull_dimension", [](const Geometry& g) {
    auto res = krull_dimension(g);
    return py::make_tuple(res.dimension, res.exact);
  });
  m.def("generic_point_exists", [](const Geometry& g) { return generic_point(g).has_value(); });

  // products
  m.def("cartesian_product",
        [](const Geometry& a, const Geometry& b) { return cartesian_product(a, b).geom; });
  m.def("sabidussi_check", &sabidussi_check);

  // motivic classes
  m.def("quadric_class", [](int mdim, int p, int k) {
    Fq f = Fq::make(p, k);
    MotivicClass cls = quadric_class(orthogonal_form(mdim, f), mdim, f);
    py::dict d;
    d["a"] = cls.a;
    d["b"] = cls.b;
    d["str"] = cls.str();
    return d;
  }, py::arg("m"), py::arg("p"), py::arg("k"));
  m.def("quadric_class_eval", [](int mdim, int p, int k, int ext) {
    Fq f = Fq::make(p, k);
    return evaluate_count(quadric_class(orthogonal_form(mdim, f), mdim, f), f.q(), ext);
  });
  m.def("count_form_zeros", [](int mdim, int p, int k, int ext) {
    Fq f = Fq::make(p, k);
    return count_form_zeros(orthogonal_form(mdim, f), f, ext);
  });

  // ring
  m.def("scissor_cut_summary",
        [](const Geometry& g, const std::vector<int>& pts, const std::vector<int>& lines) {
          Ring ring(IsoMode::IDEA1);
          int h = ring.make_root(g);
          auto res = ring.cut(h, pts, lines);
          py::dict d;
          d["element"] = ring.describe(res.element);
          d["terms"] = int(res.element.coeff.size());
          return d;
        });

  // towers
  m.def("tower_orbit_summary", [](int i, const std::vector<int>& levels) {
    Tower t = build_tower(i, levels);
    int h = levels.front(), top = levels.back();
    py::dict d;
    d["top_points"] = t.level(top).t2.geom.num_points();
    auto pts = frobenius_orbits(t, h, top, ElementKind::AnyPoint);
    auto lines = frobenius_orbits(t, h, top, ElementKind::Line);
    d["point_orbits"] = int(pts.orbits.size());
    d["fixed_points"] = pts.fixed_count;
    d["line_orbits"] = int(lines.orbits.size());
    d["fixed_lines"] = lines.fixed_count;
    RationalCheck rc = rational_elements(t, h, top);
    d["rational_matches_embedding"] = rc.equals_embedded_image;
    return d;
  });

  // serialization
  m.def("to_json", &geometry_to_json);
  m.def("from_json", &geometry_from_json);
}
