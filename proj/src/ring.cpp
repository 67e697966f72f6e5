#include "gq/ring.hpp"

#include <algorithm>

#include "gq/iso.hpp"
#include "gq/product.hpp"

namespace gq {

bool Ring::Piece::whole() const {
  return pts.count() == root->num_points() && lines.count() == root->num_lines();
}

void Ring::init() {
  keys_.push_back({Kind::Unit, "1", std::nullopt, {}, "[pt]"});
  intern_["1"] = kUnit;
  keys_.push_back({Kind::EmptyLine, "Le", std::nullopt, {}, "[L^e]"});
  intern_["Le"] = kEmptyLine;
}

RingElement Ring::one() const {
  RingElement e;
  e.coeff[kUnit] = 1;
  return e;
}

RingElement Ring::empty_line_class() const {
  RingElement e;
  e.coeff[kEmptyLine] = 1;
  return e;
}

int Ring::intern(KeyInfo info) {
  auto it = intern_.find(info.cert);
  if (it != intern_.end()) return it->second;
  int id = int(keys_.size());
  intern_[info.cert] = id;
  keys_.push_back(std::move(info));
  return id;
}

const PermGroup& Ring::aut_of(const Geometry* root) {
  auto it = aut_cache_.find(root);
  if (it == aut_cache_.end()) {
    auto grp = std::make_shared<PermGroup>(automorphisms(*root));
    it = aut_cache_.emplace(root, grp).first;
  }
  return *it->second;
}

std::string Ring::piece_cert(const Piece& p) {
  const Geometry& root = *p.root;
  // hairy-point marks participate in the class identity via point classes
  std::vector<int> pt_classes(root.num_points(), 0);
  for (const auto& hm : root.hairy_point_marks)
    if (hm.point >= 0 && hm.point < root.num_points()) pt_classes[hm.point] = 1;

  if (p.whole() && root.hairy_point_marks.empty()) {
    return "G:" + canonical_form(root).bytes;
  }

  if (mode_ == IsoMode::IDEA2) {
    // lines and grids carry their induced permutation group, compared up to
    // permutation equivalence through an interned registry
    bool is_line = p.lines.count() == 1 && root.hairy_point_marks.empty() &&
                   (root.line_bits(p.lines.first()) & p.pts) == p.pts;
    bool is_grid = false;
    if (!is_line && !p.whole() && root.hairy_point_marks.empty()) {
      AnchoredSubgeometry s{&root, p.pts, p.lines};
      if (s.all_lines_full()) {
        Geometry ind = s.induced();
        if (check_axiom3(ind).pass) {
          auto tag = classify_axiom3_type(ind);
          is_grid = tag.kind == Axiom3TypeTag::Grid || tag.kind == Axiom3TypeTag::ThinGQ_S1;
        }
      }
    }
    if (is_line || is_grid) {
      try {
        std::vector<int> elements;
        p.pts.for_each([&](int pt) { elements.push_back(pt); });
        p.lines.for_each([&](int l) { elements.push_back(root.num_points() + l); });
        const PermGroup& aut = aut_of(&root);
        PermGroup stab = aut.setwise_stabilizer(elements);
        auto [induced, kernel] = stab.induced_action(elements);
        (void)kernel;
        std::string profile = (is_line ? std::string("L") : std::string("Gr")) +
                              std::to_string(p.pts.count()) + "_" +
                              std::to_string(p.lines.count()) + "_o" +
                              std::to_string(induced.order());
        for (size_t i = 0; i < idea2_.size(); ++i) {
          if (idea2_[i].profile != profile) continue;
          if (perm_equivalent(idea2_[i].induced, induced).has_value())
            return "I2:" + profile + "#" + std::to_string(i);
        }
        idea2_.push_back({profile, induced});
        return "I2:" + profile + "#" + std::to_string(idea2_.size() - 1);
      } catch (const GqError&) {
        // group too large to enumerate: fall through to the joint certificate
      }
    }
  }
  if (mode_ == IsoMode::PTRACE && !p.whole() && root.hairy_point_marks.empty()) {
    AnchoredSubgeometry s{&root, p.pts, p.lines};
    try {
      TraceGeometry tr = trace_geometry(s);
      Bitset no_pts(tr.geom.num_points()), no_lines(tr.geom.num_lines());
      return "PT:" + canonical_form_marked(tr.geom, no_pts, no_lines, &tr.line_type).bytes;
    } catch (const GqError&) {
      // not an (a)/(b)/(c) base: fall through
    }
  }
  return "P:" + canonical_form_marked(root, p.pts, p.lines, nullptr, &pt_classes).bytes;
}

int Ring::key_of_piece(const Piece& p) {
  if (p.whole() && p.pts.count() == 1 && p.lines.count() == 0 &&
      p.root->hairy_point_marks.empty())
    return kUnit;
  KeyInfo info;
  info.kind = Kind::Piece_;
  info.cert = piece_cert(p);
  info.name = p.whole() ? "[" + (p.root->note.empty() ? "G" : p.root->note) + "]"
                        : "[(S," + (p.root->note.empty() ? "X" : p.root->note) + ")]";
  info.exemplar = p;
  return intern(std::move(info));
}

RingElement Ring::term_of_piece(const Piece& p, int empty_marks, int* handle_out) {
  RingElement e;
  if (handle_out) *handle_out = -1;
  if (empty_marks) e.coeff[kEmptyLine] += empty_marks;
  int npts = p.pts.count(), nlines = p.lines.count();
  if (npts == 0 && nlines == 0) return e;  // the empty geometry contributes 0
  if (handle_out) {
    *handle_out = int(reps_.size());
    reps_.push_back(p);
  }
  // bare abstract point sets decompose into points
  if (p.whole() && nlines == 0 && p.root->hairy_point_marks.empty()) {
    e.coeff[kUnit] += npts;
    if (e.coeff[kUnit] == 0) e.coeff.erase(kUnit);
    return e;
  }
  int k = key_of_piece(p);
  e.coeff[k] += 1;
  return e;
}

int Ring::make_root(const Geometry& g) {
  auto root = std::make_shared<Geometry>(g);
  Piece p;
  p.pts = Bitset(root->num_points());
  for (int i = 0; i < root->num_points(); ++i) p.pts.set(i);
  p.lines = Bitset(root->num_lines());
  for (int i = 0; i < root->num_lines(); ++i) p.lines.set(i);
  p.root = root;
  p.base = root;
  reps_.push_back(std::move(p));
  return int(reps_.size()) - 1;
}

int Ring::make_anchored(const AnchoredSubgeometry& s) {
  auto root = std::make_shared<Geometry>(*s.parent);
  Piece p;
  p.root = root;
  p.base = root;
  p.pts = s.points;
  p.lines = s.lines;
  reps_.push_back(std::move(p));
  return int(reps_.size()) - 1;
}

RingElement Ring::element_of(int handle) {
  require(handle >= 0 && handle < int(reps_.size()), Err::NoRepresentative, "bad handle");
  Piece p = reps_[handle];
  int empties = int(p.root->empty_line_marks.size());
  if (empties) {
    auto stripped = std::make_shared<Geometry>(*p.root);
    stripped->empty_line_marks.clear();
    p.root = stripped;
    p.base = stripped;
    reps_[handle] = p;
  }
  return term_of_piece(p, empties, nullptr);
}

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
  RingElement r = a;
  for (auto& [k, c] : b.coeff) {
    r.coeff[k] += c;
    if (r.coeff[k] == 0) r.coeff.erase(k);
  }
  return r;
}

RingElement Ring::negate(const RingElement& a) const { return scale(a, -1); }

RingElement Ring::scale(const RingElement& a, long long c) const {
  RingElement r;
  if (c == 0) return r;
  for (auto& [k, v] : a.coeff) r.coeff[k] = v * c;
  return r;
}

RingElement Ring::mul_keys(int a, int b) {
  if (a > b) std::swap(a, b);
  const KeyInfo& ka = keys_[a];
  const KeyInfo& kb = keys_[b];
  if (ka.kind == Kind::Unit) {
    RingElement e;
    e.coeff[b] = 1;
    return e;
  }
  if (ka.kind == Kind::EmptyLine) {
    if (kb.kind == Kind::EmptyLine) return zero();  // law (law2)
    if (kb.kind == Kind::Piece_) {
      RingElement e;  // law (law1)
      long long n = kb.exemplar->pts.count();
      if (n) e.coeff[kEmptyLine] = n;
      return e;
    }
  }
  if (ka.kind == Kind::Piece_ && kb.kind == Kind::Piece_ && ka.exemplar->whole() &&
      kb.exemplar->whole()) {
    // product of abstract objects: realized Cartesian product
    ProductGeometry prod = cartesian_product(*ka.exemplar->root, *kb.exemplar->root);
    prod.geom.note = "(" + (ka.exemplar->root->note.empty() ? "A" : ka.exemplar->root->note) +
                     ") x (" + (kb.exemplar->root->note.empty() ? "B" : kb.exemplar->root->note) +
                     ")";
    return class_of(prod.geom);
  }
  // anchored or otherwise irreducible: formal product, flagged by kind
  std::vector<int> factors;
  auto absorb = [&](int k) {
    if (keys_[k].kind == Kind::Formal)
      for (int f : keys_[k].factors) factors.push_back(f);
    else
      factors.push_back(k);
  };
  absorb(a);
  absorb(b);
  std::sort(factors.begin(), factors.end());
  std::string cert = "F:";
  for (int f : factors) cert += std::to_string(f) + ",";
  KeyInfo info;
  info.kind = Kind::Formal;
  info.cert = cert;
  info.factors = factors;
  info.name = "[formal product]";
  RingElement e;
  e.coeff[intern(std::move(info))] = 1;
  return e;
}

RingElement Ring::mul(const RingElement& a, const RingElement& b) {
  RingElement r;
  for (auto& [ka, ca] : a.coeff)
    for (auto& [kb, cb] : b.coeff) r = add(r, scale(mul_keys(ka, kb), ca * cb));
  return r;
}

Geometry Ring::view_of(int handle) const {
  require(handle >= 0 && handle < int(reps_.size()), Err::NoRepresentative, "bad handle");
  const Piece& p = reps_[handle];
  AnchoredSubgeometry s{p.root.get(), p.pts, p.lines};
  return s.induced();
}

int Ring::handle_point_count(int handle) const {
  require(handle >= 0 && handle < int(reps_.size()), Err::NoRepresentative, "bad handle");
  return reps_[handle].pts.count();
}

int Ring::key_of(int handle) {
  require(handle >= 0 && handle < int(reps_.size()), Err::NoRepresentative, "bad handle");
  return key_of_piece(reps_[handle]);
}

int Ring::key_point_count(int key) const {
  if (key == kUnit) return 1;
  require(key >= 0 && key < int(keys_.size()) && keys_[key].exemplar.has_value(),
          Err::NoRepresentative, "key has no representative");
  return keys_[key].exemplar->pts.count();
}

bool Ring::is_formal_key(int key) const { return keys_[key].kind == Kind::Formal; }

std::string Ring::key_name(int key) const {
  if (key == kUnit) return "1";
  if (key == kEmptyLine) return "[L^e]";
  return keys_[key].name + "#" + std::to_string(key);
}

std::string Ring::describe(const RingElement& e) const {
  if (e.coeff.empty()) return "0";
  std::string s;
  for (auto& [k, c] : e.coeff) {
    if (!s.empty()) s += " + ";
    if (c != 1 || k == kUnit) s += std::to_string(c);
    if (k != kUnit) {
      if (c != 1) s += "*";
      s += key_name(k);
    }
  }
  return s;
}

Ring::CutResult Ring::cut(int handle, const std::vector<int>& c_view_points,
                          const std::vector<int>& c_view_lines) {
  require(handle >= 0 && handle < int(reps_.size()), Err::NoRepresentative, "bad handle");
  Piece p = reps_[handle];
  const Geometry& root = *p.root;
  std::vector<int> vpts = p.pts.to_vector();
  std::vector<int> vlines = p.lines.to_vector();
  Bitset c_pts(root.num_points()), c_lines(root.num_lines());
  for (int i : c_view_points) {
    require(i >= 0 && i < int(vpts.size()), Err::NotClosedIn, "view point out of range");
    c_pts.set(vpts[i]);
  }
  for (int i : c_view_lines) {
    require(i >= 0 && i < int(vlines.size()), Err::NotClosedIn, "view line out of range");
    c_lines.set(vlines[i]);
  }
  // C must be closed (ideal) in the view: every included line's surviving
  // points lie inside C
  bool ideal = true;
  c_lines.for_each([&](int l) {
    Bitset surv = root.line_bits(l) & p.pts;
    ideal &= surv.subset_of(c_pts);
  });
  require(ideal, Err::NotClosedIn, "C is not closed in the piece");

  CutResult res;
  if (c_pts.none() && c_lines.none()) {  // trivial cut
    res.element = element_of(handle);
    res.remnant_handle = handle;
    return res;
  }

  // the cut-out piece, anchored at the pristine root
  Piece cut_out;
  cut_out.root = p.base;
  cut_out.base = p.base;
  cut_out.pts = c_pts;
  cut_out.lines = c_lines;

  // the remnant piece
  Piece rem;
  rem.base = p.base;
  rem.pts = p.pts;
  rem.pts.subtract(c_pts);
  rem.lines = Bitset(root.num_lines());
  int empty_marks = 0;
  std::vector<HairyPointMark> marks;
  // existing hairy marks: keep while their point survives, otherwise the
  // marked direction loses its last point and becomes an empty line
  for (const auto& hm : root.hairy_point_marks) {
    if (c_pts.test(hm.point)) ++empty_marks;
    else marks.push_back(hm);
  }
  size_t kept_old = marks.size();
  p.lines.for_each([&](int l) {
    if (c_lines.test(l)) return;  // removed together with C
    Bitset surv = root.line_bits(l) & rem.pts;
    int n = surv.count();
    if (n >= 2)
      rem.lines.set(l);
    else if (n == 1)
      marks.push_back({surv.first(), "line " + std::to_string(l)});
    else
      ++empty_marks;
  });

  if (kept_old == root.hairy_point_marks.size() && marks.size() == kept_old) {
    rem.root = p.root;  // mark set unchanged: share the root
  } else {
    auto root2 = std::make_shared<Geometry>(*p.base);
    root2->hairy_point_marks = std::move(marks);
    rem.root = root2;
  }
  int rem_handle = -1, cut_handle = -1;
  RingElement out = term_of_piece(rem, empty_marks, &rem_handle);
  RingElement piece_el = term_of_piece(cut_out, 0, &cut_handle);
  res.element = add(out, piece_el);
  res.remnant_handle = rem_handle;
  res.cutout_handle = cut_handle;
  return res;
}

RingElement Ring::empty_line_product(int key) {
  if (key == kEmptyLine) return zero();  // law (law2)
  long long n = key_point_count(key);    // NoRepresentative for formal keys
  RingElement e;
  if (n) e.coeff[kEmptyLine] = n;
  return e;
}

bool Ring::grid_line_scissor_identity(const Geometry& x, const AnchoredSubgeometry& grid,
                                      int line_of_grid) {
  require(grid.lines.test(line_of_grid), Err::NotFullGrid, "line must belong to the grid");
  require(grid.all_lines_full(), Err::NotFullGrid, "grid must be full");
  {
    Geometry ind = grid.induced();
    auto tag = classify_axiom3_type(ind);
    require(tag.kind == Axiom3TypeTag::ThinGQ_S1 || tag.kind == Axiom3TypeTag::Grid,
            Err::NotFullGrid, "subgeometry is not a grid");
  }
  int xh = make_root(x);

  // route A: cut out the grid, then the line inside the grid piece
  CutResult a1 = cut(xh, grid.points.to_vector(), grid.lines.to_vector());
  // view coordinates of the line inside the grid cut-out
  std::vector<int> gpts = grid.points.to_vector();
  std::vector<int> glines = grid.lines.to_vector();
  std::vector<int> view_line_pts;
  for (int p : x.line_points(line_of_grid)) {
    auto it = std::lower_bound(gpts.begin(), gpts.end(), p);
    view_line_pts.push_back(int(it - gpts.begin()));
  }
  int view_line_id = -1;
  for (size_t i = 0; i < glines.size(); ++i)
    if (glines[i] == line_of_grid) view_line_id = int(i);
  CutResult a2 = cut(a1.cutout_handle, view_line_pts, {view_line_id});
  RingElement route_a = a1.element;
  route_a = add(route_a, negate(element_of(a1.cutout_handle)));
  route_a = add(route_a, a2.element);

  // route B: cut out the line, then the trimmed grid inside the remnant
  std::vector<int> line_pts;
  for (int p : x.line_points(line_of_grid)) line_pts.push_back(p);
  CutResult b1 = cut(xh, line_pts, {line_of_grid});
  // trimmed grid in the remnant's view coordinates
  const Piece& remp = reps_[b1.remnant_handle];
  std::vector<int> rem_pts = remp.pts.to_vector();
  std::vector<int> rem_lines = remp.lines.to_vector();
  std::vector<int> pidx(x.num_points(), -1), lidx(x.num_lines(), -1);
  for (size_t i = 0; i < rem_pts.size(); ++i) pidx[rem_pts[i]] = int(i);
  for (size_t i = 0; i < rem_lines.size(); ++i) lidx[rem_lines[i]] = int(i);
  std::vector<int> tg_pts, tg_lines;
  grid.points.for_each([&](int p) {
    if (pidx[p] >= 0) tg_pts.push_back(pidx[p]);
  });
  grid.lines.for_each([&](int l) {
    if (l != line_of_grid && lidx[l] >= 0) tg_lines.push_back(lidx[l]);
  });
  CutResult b2 = cut(b1.remnant_handle, tg_pts, tg_lines);
  RingElement route_b = b1.element;
  route_b = add(route_b, negate(element_of(b1.remnant_handle)));
  route_b = add(route_b, b2.element);

  return route_a == route_b;
}

}  // namespace gq
