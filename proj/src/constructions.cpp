#include "gq/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace gq {

Geometry empty_geometry() { return Geometry::create(0, {}); }

Geometry point_set_geometry(int n) { return Geometry::create(n, {}); }

Geometry line_geometry(int points_on_line) {
  std::vector<int> pts(points_on_line);
  std::iota(pts.begin(), pts.end(), 0);
  return Geometry::create(points_on_line, {pts});
}

Geometry grid_geometry(int u, int v) {
  require(u >= 1 && v >= 1, Err::OutOfRangeId, "grid needs positive reguli");
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < u; ++i) {
    std::vector<int> row;
    for (int j = 0; j < v; ++j) row.push_back(i * v + j);
    lines.push_back(row);
  }
  for (int j = 0; j < v; ++j) {
    std::vector<int> col;
    for (int i = 0; i < u; ++i) col.push_back(i * v + j);
    lines.push_back(col);
  }
  Geometry g = Geometry::create(u * v, lines);
  g.note = "grid " + std::to_string(u) + "x" + std::to_string(v);
  return g;
}

Geometry dual_grid_geometry(int u, int v) {
  Geometry g = dualize(grid_geometry(u, v));
  g.note = "dual grid " + std::to_string(u) + "x" + std::to_string(v);
  return g;
}

Geometry perp_geometry(int t, int pts_per_line) {
  require(t >= 0 && pts_per_line >= 1, Err::OutOfRangeId, "bad perp parameters");
  std::vector<std::vector<int>> lines;
  int next = 1;
  for (int l = 0; l <= t; ++l) {
    std::vector<int> ln{0};
    for (int j = 1; j < pts_per_line; ++j) ln.push_back(next++);
    lines.push_back(ln);
  }
  Geometry g = Geometry::create(next, lines);
  g.note = "perp t=" + std::to_string(t);
  return g;
}

QuadraticForm orthogonal_form(int m, const Fq& f) {
  require(m >= 3 && m <= 5, Err::OutOfRangeId, "orthogonal quadrangles need m in {3,4,5}");
  QuadraticForm qf = QuadraticForm::zero(m + 1);
  qf.c[0][1] = 1;
  qf.c[2][3] = 1;
  if (m == 4) qf.c[4][4] = 1;
  if (m == 5) {
    QuadraticForm g = least_irreducible_binary_form(f);
    qf.c[4][4] = g.c[0][0];
    qf.c[4][5] = g.c[0][1];
    qf.c[5][5] = g.c[1][1];
  }
  return qf;
}

QuadricGeometry quadric_gq_full(int m, const Fq& f) {
  ProjSpace pg(f, m);
  QuadraticForm form = orthogonal_form(m, f);
  std::vector<int> zeros;
  std::vector<char> on(pg.num_points(), 0);
  for (int p = 0; p < pg.num_points(); ++p)
    if (form.eval(f, pg.coords(p)) == 0) {
      on[p] = 1;
      zeros.push_back(p);
    }
  std::vector<int> idx(pg.num_points(), -1);
  for (size_t i = 0; i < zeros.size(); ++i) idx[zeros[i]] = int(i);

  std::set<std::vector<int>> lineset;
  for (size_t a = 0; a < zeros.size(); ++a)
    for (size_t b = a + 1; b < zeros.size(); ++b) {
      auto l = pg.line_through(zeros[a], zeros[b]);
      if (int(l.size()) != f.q() + 1) continue;
      bool inside = true;
      for (int p : l) inside &= bool(on[p]);
      if (!inside) continue;
      std::vector<int> mapped;
      for (int p : l) mapped.push_back(idx[p]);
      std::sort(mapped.begin(), mapped.end());
      lineset.insert(mapped);
    }

  QuadricGeometry out;
  out.form = form;
  out.quadric_point_ids = zeros;
  out.geom = Geometry::create(int(zeros.size()),
                              std::vector<std::vector<int>>(lineset.begin(), lineset.end()));
  for (size_t i = 0; i < zeros.size(); ++i) out.geom.point_labels[int(i)] = pg.coord_label(zeros[i]);
  out.geom.note = "Q(" + std::to_string(m) + "," + std::to_string(f.q()) + "): " + form.describe();
  return out;
}

Geometry quadric_gq(int m, int q) {
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
    require(p <= q, Err::NotPrime, "q is not a prime power");
  }
  Fq f = Fq::make(p, k);
  return quadric_gq_full(m, f).geom;
}

Geometry wq(int q) {
  Geometry g = dualize(quadric_gq(4, q));
  g.note = "W(" + std::to_string(q) + ") = dual of Q(4," + std::to_string(q) + ")";
  return g;
}

Geometry h3(int q) {
  Geometry g = dualize(quadric_gq(5, q));
  g.note = "H(3," + std::to_string(q) + "^2) = dual of Q(5," + std::to_string(q) + ")";
  return g;
}

bool verify_oval(const ProjSpace& plane, const std::vector<int>& pts, int nucleus) {
  std::vector<char> in(plane.num_points(), 0);
  for (int p : pts) in[p] = 1;
  std::vector<int> tangents_at(plane.num_points(), 0);
  std::vector<std::vector<int>> tangent_lines;
  for (const auto& h : plane.hyperplanes()) {  // lines of the plane
    int cnt = 0, last = -1;
    for (int p : h.points)
      if (in[p]) {
        ++cnt;
        last = p;
      }
    if (cnt > 2) return false;
    if (cnt == 1) {
      tangents_at[last]++;
      tangent_lines.push_back(h.points);
    }
  }
  for (int p : pts)
    if (tangents_at[p] != 1) return false;
  if (nucleus >= 0) {
    for (const auto& t : tangent_lines)
      if (!std::binary_search(t.begin(), t.end(), nucleus)) return false;
  }
  return true;
}

namespace {

Oval power_oval(int h, long long exponent) {
  Fq f = Fq::make(2, h);
  ProjSpace plane(f, 2);
  Oval o;
  o.q = f.q();
  for (int t = 0; t < f.q(); ++t) {
    std::vector<int> v{1, t, f.pow(t, exponent)};
    o.points.push_back(plane.id_of(v));
  }
  o.points.push_back(plane.id_of({0, 0, 1}));
  std::sort(o.points.begin(), o.points.end());
  o.points.erase(std::unique(o.points.begin(), o.points.end()), o.points.end());
  o.nucleus = plane.id_of({0, 1, 0});
  for (int p : o.points) o.pg2.push_back(plane.coords(p));
  o.nucleus_coords = plane.coords(o.nucleus);
  return o;
}

}  // namespace

Oval segre_oval(int i, int h) {
  require(i >= 1 && h >= 1, Err::OutOfRangeId, "exponents must be positive");
  require(std::gcd(i, h) == 1, Err::GcdViolation, "gcd(i,h) must be 1");
  Oval o = power_oval(h, 1ll << i);
  Fq f = Fq::make(2, h);
  ProjSpace plane(f, 2);
  require(verify_oval(plane, o.points, o.nucleus), Err::GcdViolation,
          "constructed point set is not an oval");
  return o;
}

Oval brown_oval(int h) {
  require(h >= 1, Err::OutOfRangeId, "exponent must be positive");
  require(h % 2 == 1, Err::EvenH, "Brown ovals need odd h");
  Oval o = power_oval(h, 6);
  Fq f = Fq::make(2, h);
  ProjSpace plane(f, 2);
  require(verify_oval(plane, o.points, o.nucleus), Err::EvenH,
          "constructed point set is not an oval");
  return o;
}

T2Data t2_of_oval_full(const Oval& oval) {
  require(oval.nucleus >= 0, Err::NoNucleus, "T2(O) needs an oval with a nucleus");
  int q = oval.q;
  int p = 2, k = 0;
  for (int x = q; x > 1; x /= 2) ++k;
  Fq f = Fq::make(p, k);
  ProjSpace pg3(f, 3);
  ProjSpace pg2(f, 2);

  // Base plane is X3 = 0; plane coords (a:b:c) sit at (a:b:c:0).
  auto lift = [&](const std::vector<int>& v) { return std::vector<int>{v[0], v[1], v[2], 0}; };
  std::vector<int> oval3;  // ids in PG(3) of the oval points
  for (const auto& v : oval.pg2) oval3.push_back(pg3.id_of(lift(v)));

  T2Data t2;
  t2.q = q;
  std::vector<std::vector<int>> lines;

  // Points: affine first, then planar, then the symbol.
  std::vector<int> affine_ids;  // PG(3) ids with x3 != 0
  std::vector<int> point_of_pg3(pg3.num_points(), -1);
  for (int pid = 0; pid < pg3.num_points(); ++pid) {
    if (pg3.coords(pid)[3] == 0) continue;
    point_of_pg3[pid] = int(affine_ids.size());
    affine_ids.push_back(pid);
    t2.point_kind.push_back(T2Data::Affine);
    t2.point_coords.push_back(pg3.coords(pid));
  }
  // Tangent line of the oval at each point passes through the nucleus.
  // Planar points: planes whose base trace is a tangent line.
  struct Planar {
    std::vector<int> dual;     // PG(3) dual coords
    int tangent_point;         // index into oval.points
  };
  std::vector<Planar> planars;
  for (size_t oi = 0; oi < oval.points.size(); ++oi) {
    // tangent = line joining oval point and nucleus in the base plane
    const auto& a = oval.pg2[oi];
    const auto& n = oval.nucleus_coords;
    // dual coords of the base line through a and n: cross product
    std::vector<int> d(3);
    d[0] = f.sub(f.mul(a[1], n[2]), f.mul(a[2], n[1]));
    d[1] = f.sub(f.mul(a[2], n[0]), f.mul(a[0], n[2]));
    d[2] = f.sub(f.mul(a[0], n[1]), f.mul(a[1], n[0]));
    for (int c = 0; c < q; ++c) {
      Planar pl;
      pl.dual = {d[0], d[1], d[2], c};
      pl.tangent_point = int(oi);
      planars.push_back(pl);
    }
  }
  int planar_base = int(affine_ids.size());
  for (auto& pl : planars) {
    t2.point_kind.push_back(T2Data::Planar);
    t2.point_coords.push_back(pg3.normalize(pl.dual));
  }
  int infty = planar_base + int(planars.size());
  t2.point_kind.push_back(T2Data::Infty);
  t2.point_coords.push_back({});
  int n_points = infty + 1;

  auto on_plane = [&](const std::vector<int>& dual, int pg3_pt) {
    return pg3.dot(dual, pg3.coords(pg3_pt)) == 0;
  };

  // Type (a) lines: PG(3) lines through an oval point, not in the base plane.
  std::set<std::vector<int>> seen;
  for (size_t oi = 0; oi < oval3.size(); ++oi) {
    for (int aff : affine_ids) {
      auto l = pg3.line_through(oval3[oi], aff);
      if (seen.count(l)) continue;
      seen.insert(l);
      std::vector<int> members;
      std::vector<std::vector<int>> coords;
      for (int pid : l) {
        if (point_of_pg3[pid] >= 0) {
          members.push_back(point_of_pg3[pid]);
          coords.push_back(pg3.coords(pid));
        }
      }
      // planar points containing this line entirely
      for (size_t pi = 0; pi < planars.size(); ++pi) {
        bool contains = true;
        for (int pid : l) contains &= on_plane(planars[pi].dual, pid);
        if (contains) members.push_back(planar_base + int(pi));
      }
      std::sort(members.begin(), members.end());
      lines.push_back(members);
      t2.line_kind.push_back(T2Data::Ambient);
      t2.line_coords.push_back(coords);
      t2.line_oval_coords.push_back(oval.pg2[oi]);
    }
  }
  // Type (b) lines: the oval points themselves.
  for (size_t oi = 0; oi < oval.points.size(); ++oi) {
    std::vector<int> members{infty};
    for (size_t pi = 0; pi < planars.size(); ++pi)
      if (planars[pi].tangent_point == int(oi)) members.push_back(planar_base + int(pi));
    std::sort(members.begin(), members.end());
    lines.push_back(members);
    t2.line_kind.push_back(T2Data::OvalPoint);
    t2.line_coords.push_back({});
    t2.line_oval_coords.push_back(oval.pg2[oi]);
  }

  t2.geom = Geometry::create(n_points, lines);
  for (int pid = 0; pid < n_points; ++pid) {
    if (t2.point_kind[pid] == T2Data::Affine)
      t2.geom.point_labels[pid] = "affine";
    else if (t2.point_kind[pid] == T2Data::Planar)
      t2.geom.point_labels[pid] = "planar";
    else
      t2.geom.point_labels[pid] = "infinity";
  }
  for (int lid = 0; lid < t2.geom.num_lines(); ++lid)
    t2.geom.line_labels[lid] = t2.line_kind[lid] == T2Data::Ambient ? "ambient" : "oval-point";
  t2.geom.note = "T2(O), q=" + std::to_string(q);
  return t2;
}

Geometry t2_of_oval(const Oval& oval) { return t2_of_oval_full(oval).geom; }

long long count_form_zeros(const QuadraticForm& F, const Fq& base, int m) {
  Fq big = (m == 1) ? base : Fq::make(base.p(), base.k() * m);
  std::vector<int> emb = base.embedding_into(big);
  QuadraticForm FF = F;
  for (int i = 0; i < F.dim; ++i)
    for (int j = i; j < F.dim; ++j) FF.c[i][j] = emb[F.c[i][j]];

  long long total = 1;
  for (int i = 0; i < F.dim; ++i) total *= big.q();

  int threads = 1;
  if (const char* env = std::getenv("GQKIT_THREADS")) threads = std::max(1, atoi(env));
  threads = std::min<long long>(threads, 8);

  auto count_range = [&](long long lo, long long hi, long long* out) {
    std::vector<int> v(FF.dim);
    long long cnt = 0;
    for (long long e = lo; e < hi; ++e) {
      long long x = e;
      for (int i = 0; i < FF.dim; ++i) {
        v[i] = int(x % big.q());
        x /= big.q();
      }
      if (FF.eval(big, v) == 0) ++cnt;
    }
    *out = cnt;
  };

  long long affine_zeros = 0;
  if (threads == 1 || total < 100000) {
    count_range(0, total, &affine_zeros);
  } else {
    std::vector<long long> parts(threads, 0);
    std::vector<std::thread> pool;
    long long chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(count_range, t * chunk, std::min<long long>(total, (t + 1) * chunk),
                        &parts[t]);
    for (auto& th : pool) th.join();
    for (long long c : parts) affine_zeros += c;
  }
  return (affine_zeros - 1) / (big.q() - 1);
}

Geometry fano_plane() {
  Fq f2 = Fq::make(2, 1);
  ProjSpace pg(f2, 2);
  auto lines = pg.all_lines();
  Geometry g = Geometry::create(pg.num_points(), lines);
  g.note = "PG(2,2)";
  return g;
}

}  // namespace gq
