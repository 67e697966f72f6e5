// gq: build, inspect and compute with finite generalized quadrangles.
//
// Exit codes: 0 = success / verdict true, 2 = computed verdict false,
// 1 = error (bad flags, IO, unsupported input).

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

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

using nlohmann::json;
using namespace gq;

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  require(bool(out), Err::IOError, "cannot open " + path);
  out << text;
}

AnchoredSubgeometry load_subgeometry(const Geometry& g, const std::string& path) {
  std::ifstream in(path);
  require(bool(in), Err::IOError, "cannot open " + path);
  json j = json::parse(in);
  AnchoredSubgeometry s;
  s.parent = &g;
  s.points = Bitset(g.num_points());
  s.lines = Bitset(g.num_lines());
  for (int p : j.value("points", std::vector<int>{})) s.points.set(p);
  for (int l : j.value("lines", std::vector<int>{})) s.lines.set(l);
  return s;
}

int cmd_build(const std::string& what, int q, const std::string& oval_kind, int oi, int oh,
              int u, int v, const std::string& out, const std::string& dot) {
  Geometry g;
  if (what == "q3" || what == "q4" || what == "q5") {
    int m = what[1] - '0';
    g = quadric_gq(m, q);
  } else if (what == "w") {
    g = wq(q);
  } else if (what == "h3") {
    g = h3(q);
  } else if (what == "grid") {
    g = grid_geometry(u, v);
  } else if (what == "dualgrid") {
    g = dual_grid_geometry(u, v);
  } else if (what == "perp") {
    g = perp_geometry(u, v);
  } else if (what == "line") {
    g = line_geometry(u);
  } else if (what == "fano") {
    g = fano_plane();
  } else if (what == "t2") {
    Oval o = (oval_kind == "brown") ? brown_oval(oh) : segre_oval(oi, oh);
    g = t2_of_oval(o);
  } else {
    fail(Err::BadFlags, "unknown construction: " + what);
  }
  write_text(out, geometry_to_json(g));
  if (!dot.empty()) write_text(dot, collinearity_dot(g));
  std::cerr << "points=" << g.num_points() << " lines=" << g.num_lines() << "\n";
  return 0;
}

int cmd_check(const std::string& in) {
  Geometry g = load_geometry(in);
  json rep;
  rep["points"] = g.num_points();
  rep["lines"] = g.num_lines();
  auto a3 = check_axiom3(g);
  auto a3t = check_axiom3_tilde(g);
  rep["axiom3"] = a3.pass;
  rep["axiom3_tilde"] = a3t.pass;
  if (!a3.pass) {
    rep["axiom3_witness"] = {{"point", a3.witness_point},
                             {"line", a3.witness_line},
                             {"projections", a3.witnesses}};
  }
  if (auto ord = detect_order(g)) {
    rep["order"] = {{"s", ord->s}, {"t", ord->t}};
    rep["count_identities"] = gq_count_identities(g);
  }
  if (a3.pass) rep["type"] = classify_axiom3_type(g).name();
  std::cout << rep.dump(2) << "\n";
  return a3.pass ? 0 : 2;
}

int cmd_analyze(const std::string& in, const std::string& report, long long budget) {
  Geometry g = load_geometry(in);
  json rep;
  auto ord = detect_order(g);
  if (ord) rep["order"] = {{"s", ord->s}, {"t", ord->t}};
  rep["axiom3"] = check_axiom3(g).pass;

  if (ord) {
    json regs = json::array();
    for (int l = 0; l < g.num_lines(); ++l)
      if (is_regular_line(g, l)) regs.push_back(l);
    rep["regular_lines"] = regs;
    auto grids = full_grids(g);
    rep["full_grids"] = int(grids.size());
    if (is_thick(g)) {
      PermGroup aut = automorphisms(g);
      rep["aut_order"] = aut.order();
      json axes = json::array();
      for (int l = 0; l < g.num_lines(); ++l)
        if (is_axis_of_symmetry(g, aut, l)) axes.push_back(l);
      rep["axes_of_symmetry"] = axes;
      json tpoints = json::array();
      for (int p = 0; p < g.num_points(); ++p)
        if (is_translation_point(g, aut, p)) tpoints.push_back(p);
      rep["translation_points"] = tpoints;
    }
    auto hps = geometric_hyperplanes(g, budget);
    int novoid = 0, nsub = 0, nperp = 0;
    for (auto& h : hps) {
      if (h.kind == HyperplaneKind::Ovoid) ++novoid;
      if (h.kind == HyperplaneKind::SubGQ) ++nsub;
      if (h.kind == HyperplaneKind::MaxPerp) ++nperp;
    }
    rep["hyperplanes"] = {{"ovoids", novoid}, {"subgqs", nsub}, {"max_perps", nperp}};
    if (ord->s >= 1 && ord->t >= 1) {
      auto verdict = decomposition_verdict(g, false, budget);
      rep["decomposition"] = {{"decomposable", verdict.decomposable},
                              {"case", verdict.case_tag},
                              {"exhaustive", verdict.exhaustive}};
    }
    auto search = thick_full_subgqs(g, 1 << 16, budget);
    rep["thick_full_subgqs"] = {{"found", int(search.thick.size())},
                                {"exhaustive", search.exhaustive}};
  }
  write_text(report, rep.dump(2) + "\n");
  return 0;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, const std::string& mode,
            const std::string& witness) {
  Geometry a = load_geometry(a_path);
  Geometry b = load_geometry(b_path);
  bool verdict = false;
  json wit;
  if (mode == "ptrace") {
    // typed comparison: line labels "original"/"subtended" act as types
    auto types = [](const Geometry& g) {
      std::vector<int> t(g.num_lines(), 0);
      for (auto& [l, s] : g.line_labels)
        if (s == "subtended") t[l] = 1;
      return t;
    };
    auto ta = types(a);
    auto tb = types(b);
    Bitset ea(a.num_points()), la(a.num_lines()), eb(b.num_points()), lb(b.num_lines());
    verdict = canonical_form_marked(a, ea, la, &ta) == canonical_form_marked(b, eb, lb, &tb);
  } else {
    auto m = are_isomorphic(a, b);
    verdict = m.has_value();
    if (m && !witness.empty()) {
      wit["point_map"] = m->point_map;
      wit["line_map"] = m->line_map;
      write_text(witness, wit.dump(2) + "\n");
    }
  }
  std::cout << (verdict ? "isomorphic" : "not isomorphic") << "\n";
  return verdict ? 0 : 2;
}

int cmd_dim(const std::string& in, long long budget) {
  Geometry g = load_geometry(in);
  auto res = krull_dimension(g, budget);
  json rep;
  rep["dimension"] = res.dimension;
  rep["exact"] = res.exact;
  json chain = json::array();
  for (auto& e : res.chain.elements)
    chain.push_back({{"points", e.points.count()}, {"lines", e.lines.count()}});
  rep["chain"] = chain;
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_spec(const std::string& in, const std::string& kind, const std::string& remove_path,
             int limit) {
  Geometry g = load_geometry(in);
  SpecView view = SpecView::proj(g);
  if (kind == "aff") {
    require(!remove_path.empty(), Err::BadFlags, "aff views need --remove");
    view = SpecView::aff(g, load_subgeometry(g, remove_path));
  } else if (kind == "quas") {
    require(!remove_path.empty(), Err::BadFlags, "quas views need --remove");
    view = SpecView::quas(g, load_subgeometry(g, remove_path));
  }
  json rep;
  rep["kind"] = kind;
  rep["generic_point"] = view.has_generic_point();
  auto surviving = view.surviving_primes();
  rep["primes"] = int(surviving.size());
  json list = json::array();
  const auto& prim = view.primes();
  for (int i : surviving) {
    if (int(list.size()) >= limit) break;
    const auto& e = prim.elems[i];
    const char* kindname =
        e.kind == PrimalKind::OrdinaryPoint ? "point"
        : e.kind == PrimalKind::FullLine    ? "full-line"
        : e.kind == PrimalKind::PerpInFullSub ? "perp"
        : e.kind == PrimalKind::FullGrid      ? "full-grid"
                                              : "thick-subgq";
    list.push_back({{"kind", kindname},
                    {"points", e.sub.points.count()},
                    {"lines", e.sub.lines.count()}});
  }
  rep["list"] = list;
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_product(const std::string& a_path, const std::string& b_path, const std::string& out,
                const std::string& dot) {
  Geometry a = load_geometry(a_path);
  Geometry b = load_geometry(b_path);
  ProductGeometry p = cartesian_product(a, b);
  write_text(out, geometry_to_json(p.geom));
  if (!dot.empty()) write_text(dot, collinearity_dot(p.geom));
  std::cerr << "points=" << p.geom.num_points() << " lines=" << p.geom.num_lines() << "\n";
  return 0;
}

int cmd_class(const std::string& form, int q, const std::string& eval_spec) {
  int m = 0;
  if (form == "q3") m = 3;
  else if (form == "q4") m = 4;
  else if (form == "q5") m = 5;
  else fail(Err::BadFlags, "--form must be q3, q4 or q5");
  int p = 2, k = 1;
  for (p = 2;; ++p) {
    if (!is_prime(p)) continue;
    int x = q;
    k = 0;
    while (x % p == 0) {
      x /= p;
      ++k;
    }
    if (x == 1 && k >= 1) break;
    require(p <= q, Err::BadFlags, "q must be a prime power");
  }
  Fq f = Fq::make(p, k);
  QuadraticForm qf = orthogonal_form(m, f);
  MotivicClass cls = quadric_class(qf, m, f);
  json rep;
  rep["form"] = qf.describe();
  rep["class"] = cls.str();
  rep["a"] = cls.a;
  rep["b"] = cls.b;
  rep["K"] = cls.K == MotivicClass::Ext::Degree2      ? "Fq2"
             : cls.K == MotivicClass::Ext::DualNumbers ? "dual"
                                                       : "Fq";
  if (!eval_spec.empty()) {
    json evals = json::object();
    std::stringstream ss(eval_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.rfind("m=", 0) == 0) tok = tok.substr(2);
      int ext = std::stoi(tok);
      long long predicted = evaluate_count(cls, q, ext);
      long long counted = count_form_zeros(qf, f, ext);
      evals[std::to_string(ext)] = {{"evaluated", predicted}, {"counted", counted}};
      if (predicted != counted) {
        std::cout << rep.dump(2) << "\n";
        return 2;
      }
    }
    rep["eval"] = evals;
  }
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_ring_cut(const std::string& g_path, const std::string& closed_path) {
  Geometry g = load_geometry(g_path);
  AnchoredSubgeometry c = load_subgeometry(g, closed_path);
  Ring ring(IsoMode::IDEA1);
  int handle = ring.make_root(g);
  auto res = ring.cut(handle, c.points.to_vector(), c.lines.to_vector());
  json rep;
  rep["element"] = ring.describe(res.element);
  rep["remnant_points"] = res.remnant_handle >= 0 ? ring.handle_point_count(res.remnant_handle) : 0;
  rep["cutout_points"] = res.cutout_handle >= 0 ? ring.handle_point_count(res.cutout_handle) : 0;
  std::cout << rep.dump(2) << "\n";
  return 0;
}

int cmd_tower(int i, const std::string& levels_spec, const std::string& orbits_spec,
              const std::string& out) {
  std::vector<int> levels;
  std::stringstream ss(levels_spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) levels.push_back(std::stoi(tok));
  Tower t = build_tower(i, levels);
  json rep;
  rep["i"] = i;
  rep["levels"] = levels;
  for (auto& lvl : t.levels)
    rep["points"][std::to_string(lvl.h)] = lvl.t2.geom.num_points();
  if (levels.size() >= 2 && !orbits_spec.empty()) {
    int h = levels.front(), top = levels.back();
    json orb = json::object();
    std::stringstream so(orbits_spec);
    while (std::getline(so, tok, ',')) {
      ElementKind kind;
      if (tok == "points") kind = ElementKind::AnyPoint;
      else if (tok == "affine") kind = ElementKind::AffinePoint;
      else if (tok == "planar") kind = ElementKind::PlanarPoint;
      else if (tok == "lines") kind = ElementKind::Line;
      else if (tok == "symbol") kind = ElementKind::Symbol;
      else fail(Err::BadFlags, "unknown orbit kind: " + tok);
      auto dec = frobenius_orbits(t, h, top, kind);
      json sizes = json::array();
      for (auto& o : dec.orbits) sizes.push_back(int(o.size()));
      orb[tok] = {{"orbits", int(dec.orbits.size())},
                  {"fixed", dec.fixed_count},
                  {"sizes", sizes}};
    }
    rep["orbits"] = orb;
    RationalCheck rc = rational_elements(t, h, top);
    rep["rational"] = {{"points", int(rc.fixed_points.size())},
                       {"lines", int(rc.fixed_lines.size())},
                       {"equals_embedded_image", rc.equals_embedded_image}};
  }
  write_text(out, rep.dump(2) + "\n");
  return 0;
}

int cmd_corpus(const std::string& out_dir, int q_max) {
  json manifest = json::object();
  auto emit = [&](const std::string& name, const Geometry& g) {
    std::string text = geometry_to_json(g);
    std::string path = out_dir + "/" + name + ".json";
    write_text(path, text);
    manifest[name] = {{"points", g.num_points()},
                      {"lines", g.num_lines()},
                      {"fingerprint", file_fingerprint(text)}};
  };
  for (int q : {2, 3}) {
    if (q > q_max) continue;
    emit("q3_" + std::to_string(q), quadric_gq(3, q));
    emit("q4_" + std::to_string(q), quadric_gq(4, q));
    emit("q5_" + std::to_string(q), quadric_gq(5, q));
    emit("w_" + std::to_string(q), wq(q));
    emit("h3_" + std::to_string(q), h3(q));
  }
  if (q_max >= 4) {
    emit("q3_4", quadric_gq(3, 4));
    emit("q4_4", quadric_gq(4, 4));
  }
  emit("grid33", grid_geometry(3, 3));
  emit("dualgrid33", dual_grid_geometry(3, 3));
  emit("perp23", perp_geometry(2, 3));
  emit("t2_brown1", t2_of_oval(brown_oval(1)));
  emit("t2_segre31", t2_of_oval(segre_oval(3, 1)));
  emit("fano", fano_plane());
  write_text(out_dir + "/manifest.json", manifest.dump(2) + "\n");
  std::cerr << "corpus: " << manifest.size() << " geometries\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite generalized quadrangles: constructions, spectra, ring classes"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");

  // build
  auto* build = app.add_subcommand("build", "construct a geometry");
  build->set_help_flag("--help", "print help");  // frees --h for the field exponent
  std::string what, oval_kind = "segre", out = "-", dot;
  int q = 2, oi = 2, oh = 1, bu = 3, bv = 3;
  build->add_option("what", what, "q3|q4|q5|w|h3|grid|dualgrid|perp|line|fano|t2")->required();
  build->add_option("--q", q, "field order");
  build->add_option("--oval", oval_kind, "brown|segre (for t2)");
  build->add_option("--i", oi, "Segre exponent");
  build->add_option("--h", oh, "field exponent (q = 2^h)");
  build->add_option("--u", bu, "rows / perp line count t / line size");
  build->add_option("--v", bv, "columns / perp points per line");
  build->add_option("-o,--out", out, "output path (default stdout)");
  build->add_option("--dot", dot, "also write a collinearity DOT file");

  // check
  auto* check = app.add_subcommand("check", "axioms, order and classification");
  std::string check_in;
  check->add_option("input", check_in)->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "substructure report");
  std::string an_in, an_report = "-";
  long long budget = 2'000'000;
  analyze->add_option("--in", an_in)->required();
  analyze->add_option("--report", an_report);
  analyze->add_option("--budget", budget, "search node budget");

  // iso
  auto* iso = app.add_subcommand("iso", "isomorphism test");
  std::string iso_a, iso_b, iso_mode = "idea1", iso_witness;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();
  iso->add_option("--mode", iso_mode, "idea1|idea2|ptrace");
  iso->add_option("--witness", iso_witness, "write the witness map as JSON");

  // dim
  auto* dim = app.add_subcommand("dim", "Krull dimension");
  std::string dim_in;
  dim->add_option("input", dim_in)->required();
  dim->add_option("--budget", budget);

  // spec
  auto* spec = app.add_subcommand("spec", "spectrum views");
  std::string spec_in, spec_kind = "proj", spec_remove;
  int spec_limit = 20;
  spec->add_option("input", spec_in)->required();
  spec->add_option("--kind", spec_kind, "proj|aff|quas");
  spec->add_option("--remove", spec_remove, "removed subgeometry JSON (aff/quas)");
  spec->add_option("--limit", spec_limit, "list at most this many primes");

  // product
  auto* product = app.add_subcommand("product", "Cartesian product");
  std::string pr_a, pr_b, pr_out = "-", pr_dot;
  product->add_option("a", pr_a)->required();
  product->add_option("b", pr_b)->required();
  product->add_option("-o,--out", pr_out);
  product->add_option("--dot", pr_dot);

  // class
  auto* cls = app.add_subcommand("class", "motivic quadric class");
  std::string cls_form = "q4", cls_eval;
  cls->add_option("--form", cls_form, "q3|q4|q5");
  cls->add_option("--q", q);
  cls->add_option("--eval", cls_eval, "extensions, e.g. m=1,2");

  // ring
  auto* ring = app.add_subcommand("ring", "ring operations");
  auto* ring_cut = ring->add_subcommand("cut", "scissor cut");
  std::string rc_g, rc_closed;
  ring_cut->add_option("geometry", rc_g)->required();
  ring_cut->add_option("closed", rc_closed)->required();

  // tower
  auto* tower = app.add_subcommand("tower", "Galois tower of T2 quadrangles");
  int tw_i = 2;
  std::string tw_levels = "1,3", tw_orbits, tw_out = "-";
  tower->add_option("--i", tw_i, "Segre exponent (0 = Brown family)");
  tower->add_option("--levels", tw_levels, "divisibility chain, e.g. 1,3");
  tower->add_option("--orbits", tw_orbits, "points,affine,planar,lines,symbol");
  tower->add_option("--out", tw_out);

  // corpus
  auto* corpus = app.add_subcommand("corpus", "generate the test corpus");
  std::string corpus_out = "corpus";
  int q_max = 3;
  corpus->add_option("--out", corpus_out);
  corpus->add_option("--q-max", q_max);

  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized sweeps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(what, q, oval_kind, oi, oh, bu, bv, out, dot);
    if (check->parsed()) return cmd_check(check_in);
    if (analyze->parsed()) return cmd_analyze(an_in, an_report, budget);
    if (iso->parsed()) return cmd_iso(iso_a, iso_b, iso_mode, iso_witness);
    if (dim->parsed()) return cmd_dim(dim_in, budget);
    if (spec->parsed()) return cmd_spec(spec_in, spec_kind, spec_remove, spec_limit);
    if (product->parsed()) return cmd_product(pr_a, pr_b, pr_out, pr_dot);
    if (cls->parsed()) return cmd_class(cls_form, q, cls_eval);
    if (ring->parsed() && ring_cut->parsed()) return cmd_ring_cut(rc_g, rc_closed);
    if (tower->parsed()) return cmd_tower(tw_i, tw_levels, tw_orbits, tw_out);
    if (corpus->parsed()) return cmd_corpus(corpus_out, q_max);
  } catch (const GqError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
