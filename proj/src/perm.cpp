#include "gq/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gq {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = int(i);
  return r;
}

bool is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != int(i)) return false;
  return true;
}

PermGroup::PermGroup(int degree, std::vector<Perm> gens, std::vector<int> base_hint)
    : degree_(degree) {
  std::set<Perm> seen;
  for (auto& g : gens)
    if (!is_identity(g) && seen.insert(g).second) gens_.push_back(g);
  build(std::move(base_hint));
}

// Schreier-Sims as a verification loop: build the chain from the current pool,
// test all Schreier generators by sifting, grow the pool with failures, repeat
// until the chain verifies. Deterministic and exact.
void PermGroup::build(std::vector<int> base_hint) {
  base_.clear();
  strong_.clear();
  orbit_.clear();
  where_.clear();
  transversal_.clear();
  order_ = 1;
  if (gens_.empty()) return;

  std::vector<Perm> pool = gens_;
  std::set<Perm> pool_set(pool.begin(), pool.end());
  for (int p : base_hint)
    if (p >= 0 && p < degree_ &&
        std::find(base_.begin(), base_.end(), p) == base_.end())
      base_.push_back(p);

  auto fixes_prefix = [&](const Perm& g, size_t upto) {
    for (size_t i = 0; i < upto; ++i)
      if (g[base_[i]] != base_[i]) return false;
    return true;
  };

  while (true) {
    // extend the base until no pool element fixes all of it
    for (bool grew = true; grew;) {
      grew = false;
      for (const Perm& g : pool)
        if (fixes_prefix(g, base_.size())) {
          for (int i = 0; i < degree_; ++i)
            if (g[i] != i) {
              base_.push_back(i);
              grew = true;
              break;
            }
          if (grew) break;
        }
    }
    // strong sets + orbits + transversals
    size_t L = base_.size();
    strong_.assign(L, {});
    orbit_.assign(L, {});
    where_.assign(L, std::vector<int>(degree_, -1));
    transversal_.assign(L, {});
    for (size_t l = 0; l < L; ++l) {
      for (const Perm& g : pool)
        if (fixes_prefix(g, l)) strong_[l].push_back(g);
      int b = base_[l];
      orbit_[l].push_back(b);
      where_[l][b] = 0;
      transversal_[l].push_back(identity_perm(degree_));
      for (size_t qi = 0; qi < orbit_[l].size(); ++qi)
        for (const Perm& s : strong_[l]) {
          int im = s[orbit_[l][qi]];
          if (where_[l][im] < 0) {
            where_[l][im] = int(orbit_[l].size());
            orbit_[l].push_back(im);
            transversal_[l].push_back(compose(s, transversal_[l][qi]));
          }
        }
    }
    // verify Schreier generators
    bool added = false;
    for (size_t l = 0; l < L && !added; ++l)
      for (size_t oi = 0; oi < orbit_[l].size() && !added; ++oi)
        for (const Perm& s : strong_[l]) {
          Perm sch = compose(inverse(transversal_[l][where_[l][s[orbit_[l][oi]]]]),
                             compose(s, transversal_[l][oi]));
          if (is_identity(sch)) continue;
          Perm res;
          if (!sift(sch, &res) && !is_identity(res) && pool_set.insert(res).second) {
            pool.push_back(res);
            added = true;
            break;
          }
        }
    if (!added) break;
  }
  order_ = 1;
  for (size_t l = 0; l < base_.size(); ++l) order_ *= (unsigned long long)orbit_[l].size();
}

bool PermGroup::sift(Perm g, Perm* residue) const {
  for (size_t lvl = 0; lvl < base_.size(); ++lvl) {
    int im = g[base_[lvl]];
    if (im == base_[lvl]) continue;
    if (where_[lvl][im] < 0) {
      *residue = g;
      return false;
    }
    g = compose(inverse(transversal_[lvl][where_[lvl][im]]), g);
  }
  *residue = g;
  return is_identity(g);
}

bool PermGroup::contains(const Perm& g) const {
  if (gens_.empty()) return is_identity(g);
  Perm res;
  return sift(g, &res);
}

std::vector<int> PermGroup::orbit_of(int p) const {
  std::vector<int> orb{p};
  std::vector<char> seen(degree_, 0);
  seen[p] = 1;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens_) {
      int im = g[orb[i]];
      if (!seen[im]) {
        seen[im] = 1;
        orb.push_back(im);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> res;
  std::vector<char> seen(degree_, 0);
  for (int p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit_of(p);
    for (int x : orb) seen[x] = 1;
    res.push_back(orb);
  }
  return res;
}

bool PermGroup::transitive_on(const std::vector<int>& set) const {
  if (set.empty()) return true;
  auto orb = orbit_of(set[0]);
  std::set<int> os(orb.begin(), orb.end());
  for (int p : set)
    if (!os.count(p)) return false;
  return true;
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<int>& pts) const {
  if (gens_.empty()) return *this;
  PermGroup with_base(degree_, gens_, pts);
  std::vector<Perm> sub;
  for (size_t l = 0; l < with_base.base_.size(); ++l)
    for (const Perm& s : with_base.strong_[l]) {
      bool fixes = true;
      for (int p : pts)
        if (s[p] != p) {
          fixes = false;
          break;
        }
      if (fixes) sub.push_back(s);
    }
  return PermGroup(degree_, sub);
}

std::vector<Perm> PermGroup::elements(unsigned long long cap) const {
  require(order_ <= cap, Err::BudgetExceeded, "group too large to enumerate");
  std::vector<Perm> out{identity_perm(degree_)};
  if (gens_.empty()) return out;
  // g = u_0 . u_1 . ... . u_(k-1) with u_l in the level-l transversal and the
  // rightmost factor applied first
  for (size_t l = base_.size(); l-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * transversal_[l].size());
    for (const Perm& g : out)
      for (const Perm& u : transversal_[l]) next.push_back(compose(u, g));
    out = std::move(next);
  }
  return out;
}

PermGroup PermGroup::setwise_stabilizer(const std::vector<int>& set,
                                        unsigned long long cap) const {
  std::vector<char> in(degree_, 0);
  for (int p : set) in[p] = 1;
  std::vector<Perm> keep;
  for (const Perm& g : elements(cap)) {
    bool ok = true;
    for (int p : set)
      if (!in[g[p]]) {
        ok = false;
        break;
      }
    if (ok && !is_identity(g)) keep.push_back(g);
  }
  return PermGroup(degree_, keep);
}

std::pair<PermGroup, unsigned long long> PermGroup::induced_action(
    const std::vector<int>& subset) const {
  std::vector<int> idx(degree_, -1);
  for (size_t i = 0; i < subset.size(); ++i) idx[subset[i]] = int(i);
  std::vector<Perm> imgs;
  for (const Perm& g : gens_) {
    Perm r(subset.size());
    for (size_t i = 0; i < subset.size(); ++i) {
      int im = g[subset[i]];
      require(idx[im] >= 0, Err::IncompatibleTypes, "subset is not invariant");
      r[i] = idx[im];
    }
    imgs.push_back(r);
  }
  PermGroup induced(int(subset.size()), imgs);
  unsigned long long kernel = induced.order() ? order_ / induced.order() : order_;
  return {induced, kernel};
}

namespace {

struct EquivSearch {
  const PermGroup &A, &B;
  int n;
  std::vector<int> f, finv;
  std::vector<int> mapped;

  bool extend() {
    if (int(mapped.size()) == n) {
      Perm fp(f.begin(), f.end());
      Perm fpi = inverse(fp);
      for (const Perm& g : A.generators())
        if (!B.contains(compose(fp, compose(g, fpi)))) return false;
      return true;
    }
    int a = -1;
    for (int i = 0; i < n; ++i)
      if (f[i] < 0) {
        a = i;
        break;
      }
    std::vector<int> apts = mapped;
    apts.push_back(a);
    unsigned long long oa = A.pointwise_stabilizer(apts).order();
    std::vector<int> bpts;
    for (int x : mapped) bpts.push_back(f[x]);
    bpts.push_back(0);
    for (int b = 0; b < n; ++b) {
      if (finv[b] >= 0) continue;
      bpts.back() = b;
      if (A.orbit_of(a).size() != B.orbit_of(b).size()) continue;
      if (oa != B.pointwise_stabilizer(bpts).order()) continue;
      f[a] = b;
      finv[b] = a;
      mapped.push_back(a);
      if (extend()) return true;
      mapped.pop_back();
      f[a] = -1;
      finv[b] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> perm_equivalent(const PermGroup& a, const PermGroup& b) {
  require(a.degree() == b.degree(), Err::DegreeMismatch, "degrees differ");
  if (a.order() != b.order()) return std::nullopt;
  int n = a.degree();
  auto prof = [](const PermGroup& g) {
    std::vector<int> sizes;
    for (auto& o : g.orbits()) sizes.push_back(int(o.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (prof(a) != prof(b)) return std::nullopt;
  EquivSearch s{a, b, n, std::vector<int>(n, -1), std::vector<int>(n, -1), {}};
  if (s.extend()) return Perm(s.f.begin(), s.f.end());
  return std::nullopt;
}

}  // namespace gq
