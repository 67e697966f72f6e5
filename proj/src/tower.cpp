#include "gq/tower.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gq/iso.hpp"

namespace gq {

const TowerLevel& Tower::level(int h) const {
  for (const auto& l : levels)
    if (l.h == h) return l;
  fail(Err::NotInTower, "no tower level with exponent " + std::to_string(h));
}

Tower build_tower(int i, const std::vector<int>& exponents) {
  require(!exponents.empty(), Err::NotAChain, "tower needs at least one level");
  for (size_t j = 0; j + 1 < exponents.size(); ++j)
    require(exponents[j + 1] % exponents[j] == 0, Err::NotAChain,
            "exponents must form a divisibility chain");
  Tower t;
  t.i = i;
  for (int h : exponents) {
    if (i == 0)
      require(h % 2 == 1, Err::GcdViolation, "Brown towers need odd exponents");
    else
      require(std::gcd(i, h) == 1, Err::GcdViolation, "gcd(i,h) must be 1");
    TowerLevel lvl;
    lvl.h = h;
    lvl.oval = (i == 0) ? brown_oval(h) : segre_oval(i, h);
    lvl.t2 = t2_of_oval_full(lvl.oval);
    t.levels.push_back(std::move(lvl));
  }
  // oval points embed level-by-level under the subfield inclusion
  for (size_t j = 0; j + 1 < t.levels.size(); ++j) {
    const auto& lo = t.levels[j];
    const auto& hi = t.levels[j + 1];
    Fq flo = Fq::make(2, lo.h);
    Fq fhi = Fq::make(2, hi.h);
    auto emb = flo.embedding_into(fhi);
    ProjSpace plane_hi(fhi, 2);
    std::set<int> hi_oval(hi.oval.points.begin(), hi.oval.points.end());
    for (const auto& coords : lo.oval.pg2) {
      std::vector<int> img{emb[coords[0]], emb[coords[1]], emb[coords[2]]};
      require(hi_oval.count(plane_hi.id_of(img)) > 0, Err::NotAChain,
              "oval embedding failed between tower levels");
    }
  }
  return t;
}

namespace {

// lookup tables from coordinates to T2 element ids at one level
struct LevelIndex {
  Fq field;
  ProjSpace pg3;
  std::map<std::vector<int>, int> affine_by_coords;  // normalized PG(3) coords
  std::map<std::vector<int>, int> planar_by_coords;  // normalized dual coords
  std::map<std::vector<int>, int> line_by_members;   // sorted point ids -> line
  std::map<std::vector<int>, int> bline_by_oval;     // oval coords -> type-b line
  int infinity = -1;

  explicit LevelIndex(const TowerLevel& lvl)
      : field(Fq::make(2, lvl.h)), pg3(field, 3) {
    const T2Data& t2 = lvl.t2;
    for (int p = 0; p < t2.geom.num_points(); ++p) {
      if (t2.point_kind[p] == T2Data::Affine)
        affine_by_coords[pg3.normalize(t2.point_coords[p])] = p;
      else if (t2.point_kind[p] == T2Data::Planar)
        planar_by_coords[pg3.normalize(t2.point_coords[p])] = p;
      else
        infinity = p;
    }
    for (int l = 0; l < t2.geom.num_lines(); ++l) {
      if (t2.line_kind[l] == T2Data::Ambient)
        line_by_members[t2.geom.line_points(l)] = l;
      else
        bline_by_oval[t2.line_oval_coords[l]] = l;
    }
  }
};

std::vector<int> apply_to_coords(const Fq& f, const std::vector<int>& coords,
                                 const std::vector<int>& value_map) {
  std::vector<int> out(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) out[i] = value_map[coords[i]];
  return out;
}

// permutation of points+lines induced by a field map (Frobenius power or the
// identity embedding composed with coordinate transport)
std::vector<int> induced_permutation(const TowerLevel& lvl, const LevelIndex& idx,
                                     const std::vector<int>& value_map) {
  const T2Data& t2 = lvl.t2;
  int np = t2.geom.num_points();
  std::vector<int> perm(np + t2.geom.num_lines(), -1);
  for (int p = 0; p < np; ++p) {
    if (t2.point_kind[p] == T2Data::Infty) {
      perm[p] = p;
    } else if (t2.point_kind[p] == T2Data::Affine) {
      auto img = idx.pg3.normalize(apply_to_coords(idx.field, t2.point_coords[p], value_map));
      perm[p] = idx.affine_by_coords.at(img);
    } else {
      auto img = idx.pg3.normalize(apply_to_coords(idx.field, t2.point_coords[p], value_map));
      perm[p] = idx.planar_by_coords.at(img);
    }
  }
  for (int l = 0; l < t2.geom.num_lines(); ++l) {
    if (t2.line_kind[l] == T2Data::OvalPoint) {
      std::vector<int> img(3);
      for (int c = 0; c < 3; ++c) img[c] = value_map[t2.line_oval_coords[l][c]];
      // normalize in the plane: rely on oval coords being stored normalized;
      // Frobenius of a normalized vector stays normalized (leading 1 fixed)
      perm[np + l] = np + idx.bline_by_oval.at(img);
    } else {
      std::vector<int> members;
      for (int p : t2.geom.line_points(l)) members.push_back(perm[p]);
      std::sort(members.begin(), members.end());
      perm[np + l] = np + idx.line_by_members.at(members);
    }
  }
  return perm;
}

}  // namespace

std::vector<int> frobenius_permutation(const Tower& t, int h, int top_h) {
  const TowerLevel& top = t.level(top_h);
  t.level(h);  // membership check
  require(top_h % h == 0, Err::NotInTower, "base must divide the top exponent");
  LevelIndex idx(top);
  // x -> x^(2^h)
  std::vector<int> value_map(idx.field.q());
  for (int x = 0; x < idx.field.q(); ++x) {
    int y = x;
    for (int k = 0; k < h; ++k) y = idx.field.mul(y, y);
    value_map[x] = y;
  }
  return induced_permutation(top, idx, value_map);
}

OrbitDecomposition frobenius_orbits(const Tower& t, int h, int top_h, ElementKind kind) {
  const TowerLevel& top = t.level(top_h);
  std::vector<int> perm = frobenius_permutation(t, h, top_h);
  const T2Data& t2 = top.t2;
  int np = t2.geom.num_points();

  auto in_kind = [&](int domain_id) {
    if (domain_id >= np) return kind == ElementKind::Line;
    switch (kind) {
      case ElementKind::AffinePoint: return t2.point_kind[domain_id] == T2Data::Affine;
      case ElementKind::PlanarPoint: return t2.point_kind[domain_id] == T2Data::Planar;
      case ElementKind::Symbol: return t2.point_kind[domain_id] == T2Data::Infty;
      case ElementKind::AnyPoint: return true;
      case ElementKind::Line: return false;
    }
    return false;
  };

  OrbitDecomposition dec;
  std::vector<char> seen(perm.size(), 0);
  for (int e = 0; e < int(perm.size()); ++e) {
    if (seen[e] || !in_kind(e)) continue;
    std::vector<int> orbit;
    int x = e;
    do {
      seen[x] = 1;
      orbit.push_back(x >= np ? x - np : x);
      x = perm[x];
    } while (x != e);
    if (orbit.size() == 1) dec.fixed_count++;
    dec.orbits.push_back(std::move(orbit));
  }
  return dec;
}

ElementMaps tower_embedding(const Tower& t, int h, int top_h) {
  const TowerLevel& lo = t.level(h);
  const TowerLevel& hi = t.level(top_h);
  require(top_h % h == 0, Err::NotInTower, "base must divide the top exponent");
  Fq flo = Fq::make(2, lo.h);
  LevelIndex idx(hi);
  auto emb = flo.embedding_into(idx.field);

  const T2Data& a = lo.t2;
  const T2Data& b = hi.t2;
  ElementMaps maps;
  maps.point_map.assign(a.geom.num_points(), -1);
  maps.line_map.assign(a.geom.num_lines(), -1);
  Fq dummy = flo;
  ProjSpace pg3_lo(flo, 3);
  for (int p = 0; p < a.geom.num_points(); ++p) {
    if (a.point_kind[p] == T2Data::Infty) {
      maps.point_map[p] = idx.infinity;
    } else {
      auto img = idx.pg3.normalize(apply_to_coords(idx.field, a.point_coords[p], emb));
      maps.point_map[p] = a.point_kind[p] == T2Data::Affine ? idx.affine_by_coords.at(img)
                                                            : idx.planar_by_coords.at(img);
    }
  }
  for (int l = 0; l < a.geom.num_lines(); ++l) {
    if (a.line_kind[l] == T2Data::OvalPoint) {
      std::vector<int> img(3);
      for (int c = 0; c < 3; ++c) img[c] = emb[a.line_oval_coords[l][c]];
      maps.line_map[l] = idx.bline_by_oval.at(img) ;
    } else {
      // the unique level-top line containing the images of two member points
      int p0 = maps.point_map[a.geom.line_points(l)[0]];
      int p1 = maps.point_map[a.geom.line_points(l)[1]];
      int found = -1;
      for (int bl : b.geom.lines_through(p0))
        if (b.geom.line_bits(bl).test(p1)) found = bl;
      require(found >= 0, Err::NotInTower, "line embedding failed");
      maps.line_map[l] = found;
    }
  }
  return maps;
}

RationalCheck rational_elements(const Tower& t, int h, int top_h) {
  const TowerLevel& top = t.level(top_h);
  std::vector<int> perm = frobenius_permutation(t, h, top_h);
  const T2Data& t2 = top.t2;
  int np = t2.geom.num_points();
  RationalCheck rc;
  for (int p = 0; p < np; ++p)
    if (perm[p] == p) rc.fixed_points.push_back(p);
  for (int l = 0; l < t2.geom.num_lines(); ++l)
    if (perm[np + l] == np + l) rc.fixed_lines.push_back(l);

  ElementMaps emb = tower_embedding(t, h, top_h);
  std::set<int> img_pts(emb.point_map.begin(), emb.point_map.end());
  std::set<int> img_lines(emb.line_map.begin(), emb.line_map.end());
  rc.equals_embedded_image =
      img_pts == std::set<int>(rc.fixed_points.begin(), rc.fixed_points.end()) &&
      img_lines == std::set<int>(rc.fixed_lines.begin(), rc.fixed_lines.end());

  AnchoredSubgeometry fixed;
  fixed.parent = &t2.geom;
  fixed.points = Bitset::of(t2.geom.num_points(), rc.fixed_points);
  fixed.lines = Bitset::of(t2.geom.num_lines(), rc.fixed_lines);
  rc.fixed_geometry = fixed.induced();
  return rc;
}

IdealExtension extend_ideal(const Tower& t, int h, int top_h,
                            const AnchoredSubgeometry& ideal) {
  const TowerLevel& lo = t.level(h);
  const TowerLevel& hi = t.level(top_h);
  const Geometry& glo = lo.t2.geom;
  const Geometry& ghi = hi.t2.geom;
  require(ideal.parent == &glo, Err::NotIdeal, "ideal must live in the level-h geometry");
  require(ideal.all_lines_full(), Err::NotIdeal, "extension needs an ideal subgeometry");

  ElementMaps emb = tower_embedding(t, h, top_h);
  IdealExtension out;
  out.extended.parent = &ghi;
  out.extended.points = Bitset(ghi.num_points());
  out.extended.lines = Bitset(ghi.num_lines());

  // points map across
  ideal.points.for_each([&](int p) { out.extended.points.set(emb.point_map[p]); });
  // C1: full lines extend to full lines
  ideal.lines.for_each([&](int l) {
    int il = emb.line_map[l];
    out.extended.lines.set(il);
    out.extended.points |= ghi.line_bits(il);
  });
  // C2: ideal perps stay ideal perps
  ideal.points.for_each([&](int p) {
    bool all_there = true;
    for (int l : glo.lines_through(p)) all_there &= ideal.lines.test(l);
    if (!all_there || glo.point_degree(p) == 0) return;
    int ip = emb.point_map[p];
    for (int l : ghi.lines_through(ip)) {
      out.extended.lines.set(l);
      out.extended.points |= ghi.line_bits(l);
    }
  });
  // C3: full subquadrangles extend to the subGQ generated by their lines
  std::vector<AnchoredSubgeometry> subs = full_grids(glo);
  SubGqSearch search = thick_full_subgqs(glo);
  out.subgq_search_exhaustive = search.exhaustive;
  for (auto& s : search.thick) subs.push_back(s);
  for (const auto& y : subs) {
    if (!ideal.contains(y)) continue;
    AnchoredSubgeometry seed;
    seed.parent = &ghi;
    seed.points = Bitset(ghi.num_points());
    seed.lines = Bitset(ghi.num_lines());
    y.lines.for_each([&](int l) {
      int il = emb.line_map[l];
      seed.lines.set(il);
      seed.points |= ghi.line_bits(il);
    });
    AnchoredSubgeometry closure = projection_closure(ghi, seed);
    out.extended.points |= closure.points;
    out.extended.lines |= closure.lines;
  }
  return out;
}

EnrichedClosedSet descent_closed_set(const Tower& t, int h, int top_h,
                                     const AnchoredSubgeometry& ideal) {
  const TowerLevel& hi = t.level(top_h);
  const Geometry& ghi = hi.t2.geom;
  IdealExtension ext = extend_ideal(t, h, top_h, ideal);
  EnrichedClosedSet out;
  out.exhaustive = ext.subgq_search_exhaustive;

  // primes contained in the extension: points, full lines, perps ideal in a
  // full subGQ inside the extension, grids inside the extension
  std::vector<AnchoredSubgeometry> primes;
  ext.extended.points.for_each([&](int p) {
    AnchoredSubgeometry s;
    s.parent = &ghi;
    s.points = Bitset(ghi.num_points());
    s.points.set(p);
    s.lines = Bitset(ghi.num_lines());
    primes.push_back(std::move(s));
  });
  ext.extended.lines.for_each([&](int l) {
    if (!ghi.line_bits(l).subset_of(ext.extended.points)) return;
    AnchoredSubgeometry s;
    s.parent = &ghi;
    s.points = ghi.line_bits(l);
    s.lines = Bitset(ghi.num_lines());
    s.lines.set(l);
    primes.push_back(std::move(s));
  });
  // ideal perps of the whole geometry inside the extension
  ext.extended.points.for_each([&](int p) {
    Bitset lines(ghi.num_lines());
    Bitset pts(ghi.num_points());
    for (int l : ghi.lines_through(p)) {
      lines.set(l);
      pts |= ghi.line_bits(l);
    }
    if (!lines.subset_of(ext.extended.lines)) return;
    AnchoredSubgeometry s;
    s.parent = &ghi;
    s.points = pts;
    s.lines = lines;
    primes.push_back(std::move(s));
  });
  // grids among the extension's lines
  std::vector<int> lines = ext.extended.lines.to_vector();
  for (size_t a = 0; a < lines.size(); ++a)
    for (size_t b = a + 1; b < lines.size(); ++b) {
      if (lines_concurrent(ghi, lines[a], lines[b])) continue;
      if (!is_regular_pair(ghi, lines[a], lines[b])) continue;
      AnchoredSubgeometry grid = grid_from_regular_pair(ghi, lines[a], lines[b]);
      if (grid.points.subset_of(ext.extended.points) &&
          grid.lines.subset_of(ext.extended.lines))
        primes.push_back(grid);
    }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  // Galois orbits of the primes under the h-power Frobenius
  std::vector<int> perm = frobenius_permutation(t, h, top_h);
  int np = ghi.num_points();
  auto apply = [&](const AnchoredSubgeometry& s) {
    AnchoredSubgeometry img;
    img.parent = &ghi;
    img.points = Bitset(ghi.num_points());
    img.lines = Bitset(ghi.num_lines());
    s.points.for_each([&](int p) { img.points.set(perm[p]); });
    s.lines.for_each([&](int l) { img.lines.set(perm[np + l] - np); });
    return img;
  };
  std::set<AnchoredSubgeometry> unseen(primes.begin(), primes.end());
  while (!unseen.empty()) {
    AnchoredSubgeometry rep = *unseen.begin();
    int size = 0;
    AnchoredSubgeometry cur = rep;
    AnchoredSubgeometry least = rep;
    do {
      unseen.erase(cur);
      if (cur < least) least = cur;
      cur = apply(cur);
      ++size;
    } while (!(cur == rep));
    out.primes.push_back({least, size});
  }
  return out;
}

long long oval_curve_point_count(int i, int top_h) {
  Fq f = Fq::make(2, top_h);
  ProjSpace plane(f, 2);
  long long exp = (i == 0) ? 6 : (1ll << i);
  long long count = 0;
  for (int p = 0; p < plane.num_points(); ++p) {
    const auto& v = plane.coords(p);  // (x : y : z)
    int lhs = f.pow(v[1], exp);
    int rhs = f.mul(v[2], f.pow(v[0], exp - 1));
    if (lhs == rhs) ++count;
  }
  return count;
}

}  // namespace gq
