#include "gq/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gq {

void ColoredGraph::add_edge(int u, int v) {
  adj[u].push_back(v);
  adj[v].push_back(u);
}

Bitset ColoredGraph::row(int v) const {
  Bitset b(n);
  for (int u : adj[v]) b.set(u);
  return b;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

struct Partition {
  std::vector<int> order;  // position -> vertex
  std::vector<int> pos;    // vertex -> position
  std::vector<int> cs;     // position -> start position of its cell
  std::vector<int> len;    // start position -> cell length

  explicit Partition(int n) : order(n), pos(n), cs(n, 0), len(n, 0) {}

  bool discrete() const {
    for (size_t p = 0; p < order.size(); ++p)
      if (len[cs[p]] != 1) return false;
    return true;
  }
};

class Search {
 public:
  Search(const ColoredGraph& g, long long budget) : g_(g), budget_(budget) {
    n_ = g.n;
    for (int v = 0; v < n_; ++v) rows_.push_back(g.row(v));
  }

  CanonResult run() {
    CanonResult res;
    if (n_ == 0) {
      res.certificate = "#0";
      return res;
    }
    Partition pi = initial_partition();
    std::vector<uint64_t> invpath;
    descend(pi, invpath, 0);
    res.canon_pos.assign(n_, 0);
    for (int p = 0; p < n_; ++p) res.canon_pos[best_perm_[p]] = p;
    res.certificate = best_cert_;
    res.generators = gens_;
    res.nodes = nodes_;
    return res;
  }

 private:
  const ColoredGraph& g_;
  long long budget_;
  int n_ = 0;
  std::vector<Bitset> rows_;

  // best leaf = minimal (invariant path, certificate)
  bool have_best_ = false;
  std::vector<uint64_t> best_inv_;
  std::string best_cert_;
  std::vector<int> best_perm_;  // position -> vertex at best leaf
  bool have_first_ = false;
  std::vector<uint64_t> first_inv_;
  std::string first_cert_;
  std::vector<int> first_perm_;
  std::vector<int> first_path_;
  std::vector<int> best_path_;
  std::vector<std::vector<int>> gens_;
  std::set<uint64_t> gen_hashes_;
  std::vector<int> path_;  // individualized vertices
  long long nodes_ = 0;

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    while (d < int(a.size()) && d < int(b.size()) && a[d] == b[d]) ++d;
    return d;
  }

  Partition initial_partition() {
    Partition pi(n_);
    std::vector<int> vs(n_);
    std::iota(vs.begin(), vs.end(), 0);
    std::stable_sort(vs.begin(), vs.end(),
                     [&](int a, int b) { return g_.color[a] < g_.color[b]; });
    for (int p = 0; p < n_; ++p) {
      pi.order[p] = vs[p];
      pi.pos[vs[p]] = p;
    }
    int start = 0;
    for (int p = 0; p < n_; ++p) {
      if (p > 0 && g_.color[pi.order[p]] != g_.color[pi.order[p - 1]]) start = p;
      pi.cs[p] = start;
    }
    for (int p = 0; p < n_; ++p)
      if (p + 1 == n_ || pi.cs[p + 1] != pi.cs[p]) pi.len[pi.cs[p]] = p - pi.cs[p] + 1;
    return pi;
  }

  // Equitable refinement; returns a label-invariant trace hash.
  uint64_t refine(Partition& pi) {
    uint64_t trace = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
      trace ^= x + 0x9e3779b97f4a7c15ull + (trace << 6) + (trace >> 2);
    };
    std::vector<int> cnt(n_, 0);
    std::vector<int> queue;
    for (int p = 0; p < n_; ++p)
      if (pi.cs[p] == p) queue.push_back(p);
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    size_t qi = 0;
    while (qi < queue.size()) {
      int sstart = queue[qi++];
      // splitter may have been subdivided; use its current extent conservatively
      int slen = pi.len[sstart];
      if (pi.cs[sstart] != sstart) continue;  // stale entry
      queued[sstart] = 0;
      std::vector<int> splitter(pi.order.begin() + sstart, pi.order.begin() + sstart + slen);
      std::vector<int> touched;
      for (int v : splitter)
        for (int u : g_.adj[v]) {
          if (cnt[u] == 0) touched.push_back(u);
          cnt[u]++;
        }
      // group touched vertices by cell
      std::map<int, std::vector<int>> by_cell;
      for (int u : touched) by_cell[pi.cs[pi.pos[u]]].push_back(u);
      for (auto& [cstart, _] : by_cell) {
        int clen = pi.len[cstart];
        if (clen == 1) continue;
        // sort cell content by count (stable, ascending)
        std::vector<int> cell(pi.order.begin() + cstart, pi.order.begin() + cstart + clen);
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
          if (cnt[a] != cnt[b]) return cnt[a] < cnt[b];
          return false;
        });
        bool split = false;
        for (size_t i = 1; i < cell.size(); ++i)
          if (cnt[cell[i]] != cnt[cell[i - 1]]) split = true;
        if (!split) continue;
        // write back and carve subcells
        for (int i = 0; i < clen; ++i) {
          pi.order[cstart + i] = cell[i];
          pi.pos[cell[i]] = cstart + i;
        }
        int sub = cstart;
        mix(0xabcd ^ uint64_t(cstart));
        for (int i = 0; i < clen; ++i) {
          if (i > 0 && cnt[cell[i]] != cnt[cell[i - 1]]) {
            pi.len[sub] = cstart + i - sub;
            mix(uint64_t(cnt[cell[i - 1]]) * 131 + pi.len[sub]);
            sub = cstart + i;
          }
          pi.cs[cstart + i] = sub;
        }
        pi.len[sub] = cstart + clen - sub;
        mix(uint64_t(cnt[cell[clen - 1]]) * 131 + pi.len[sub]);
        // queue all new subcells
        int p = cstart;
        while (p < cstart + clen) {
          if (!queued[p]) {
            queue.push_back(p);
            queued[p] = 1;
          }
          p += pi.len[p];
        }
      }
      for (int u : touched) cnt[u] = 0;
    }
    // fold the final cell-size sequence into the trace
    for (int p = 0; p < n_; ++p)
      if (pi.cs[p] == p) mix(uint64_t(p) * 1000003ull + pi.len[p]);
    return trace;
  }

  int target_cell(const Partition& pi) const {
    int best = -1, bl = n_ + 1;
    for (int p = 0; p < n_; ++p)
      if (pi.cs[p] == p && pi.len[p] > 1 && pi.len[p] < bl) {
        bl = pi.len[p];
        best = p;
      }
    return best;
  }

  std::string leaf_certificate(const Partition& pi) const {
    std::string cert;
    cert.reserve(size_t(n_) * 3 + size_t(n_) * n_ / 8 + 8);
    cert += "#";
    cert += std::to_string(n_);
    cert += ";";
    for (int p = 0; p < n_; ++p) {
      int c = g_.color[pi.order[p]];
      cert.push_back(char('0' + (c & 0x3f)));
      if (c > 0x3f) cert += std::to_string(c);
    }
    cert += "|";
    unsigned char acc = 0;
    int nb = 0;
    for (int i = 0; i < n_; ++i) {
      const Bitset& r = rows_[pi.order[i]];
      for (int j = i + 1; j < n_; ++j) {
        acc = (unsigned char)((acc << 1) | (r.test(pi.order[j]) ? 1 : 0));
        if (++nb == 8) {
          cert.push_back(char(acc));
          acc = 0;
          nb = 0;
        }
      }
    }
    if (nb) cert.push_back(char(acc << (8 - nb)));
    return cert;
  }

  // -1: a < b elementwise-prefix, 0 equal on shared prefix, +1 a > b
  static int cmp_prefix(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    size_t m = std::min(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
      if (a[i] < b[i]) return -1;
      if (a[i] > b[i]) return 1;
    }
    return 0;
  }

  void record_automorphism(const std::vector<int>& perm_a, const std::vector<int>& perm_b) {
    // both are position->vertex maps with identical relabeled graphs
    std::vector<int> gp(n_);
    bool identity = true;
    for (int p = 0; p < n_; ++p) {
      gp[perm_a[p]] = perm_b[p];
      if (gp[perm_a[p]] != perm_a[p]) identity = false;
    }
    if (identity) return;
    uint64_t h = 1469598103934665603ull;
    for (int x : gp) {
      h ^= uint64_t(x) + 0x9e37;
      h *= 1099511628211ull;
    }
    if (gen_hashes_.insert(h).second) gens_.push_back(gp);
  }

  // Returns a backjump depth: unwind while depth > returned value.
  int descend(Partition pi, std::vector<uint64_t>& invpath, int depth) {
    require(++nodes_ <= budget_, Err::BudgetExceeded, "canonical search budget exhausted");
    uint64_t tr = refine(pi);
    invpath.push_back(tr);

    int cmp_first = have_first_ ? cmp_prefix(invpath, first_inv_) : 0;
    int cmp_best = have_best_ ? cmp_prefix(invpath, best_inv_) : -1;
    if (have_first_ && cmp_first != 0 && have_best_ && cmp_best > 0) {
      invpath.pop_back();
      return depth;  // can match neither the first path nor improve the best
    }

    int tc = target_cell(pi);
    if (tc < 0) {
      std::string cert = leaf_certificate(pi);
      std::vector<uint64_t> full = invpath;
      full.push_back(fnv1a(cert));
      bool found_aut = false;
      if (!have_first_) {
        have_first_ = true;
        first_inv_ = full;
        first_cert_ = cert;
        first_perm_ = pi.order;
        first_path_ = path_;
      } else if (cmp_prefix(full, first_inv_) == 0 && cert == first_cert_) {
        record_automorphism(first_perm_, pi.order);
        found_aut = true;
      }
      bool better = !have_best_;
      if (have_best_) {
        int c = cmp_prefix(full, best_inv_);
        if (c < 0 || (c == 0 && cert < best_cert_)) better = true;
        else if (c == 0 && cert == best_cert_ && best_perm_ != pi.order) {
          record_automorphism(best_perm_, pi.order);
          found_aut = true;
        }
      }
      if (better) {
        have_best_ = true;
        best_inv_ = full;
        best_cert_ = cert;
        best_perm_ = pi.order;
        best_path_ = path_;
      }
      invpath.pop_back();
      if (found_aut) {
        // McKay backjump: unwind to where this leaf's path left the reference paths
        int target = std::max(common_prefix(path_, first_path_),
                              common_prefix(path_, best_path_));
        return target;
      }
      return depth;
    }

    std::vector<int> cands(pi.order.begin() + tc, pi.order.begin() + tc + pi.len[tc]);
    std::sort(cands.begin(), cands.end());

    std::vector<int> tried;
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      int v = cands[ci];
      // skip v if it lies in the orbit of an earlier candidate under the
      // automorphisms (found so far) that fix the individualized path
      if (in_tried_orbit(v, tried)) continue;
      Partition child = pi;
      individualize(child, tc, v);
      path_.push_back(v);
      int rc = descend(child, invpath, depth + 1);
      path_.pop_back();
      tried.push_back(v);
      if (rc < depth) {
        invpath.pop_back();
        return rc;
      }
    }
    invpath.pop_back();
    return depth;
  }

  bool in_tried_orbit(int v, const std::vector<int>& tried) {
    if (tried.empty()) return false;
    // generators fixing the current path, closed under inversion
    std::vector<std::vector<int>> usable;
    for (const auto& g : gens_) {
      bool fixes = true;
      for (int w : path_)
        if (g[w] != w) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      usable.push_back(g);
      std::vector<int> gi(n_);
      for (int x = 0; x < n_; ++x) gi[g[x]] = x;
      usable.push_back(std::move(gi));
    }
    if (usable.empty()) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int t : tried) {
      seen[t] = 1;
      stack.push_back(t);
    }
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : usable) {
        int y = g[x];
        if (y == v) return true;
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return false;
  }

  static void individualize(Partition& pi, int cstart, int v) {
    int clen = pi.len[cstart];
    int vp = pi.pos[v];
    // move v to the front of its cell, carve it off as a singleton
    std::swap(pi.order[cstart], pi.order[vp]);
    pi.pos[pi.order[vp]] = vp;
    pi.pos[v] = cstart;
    pi.len[cstart] = 1;
    pi.cs[cstart] = cstart;
    if (clen > 1) {
      int rest = cstart + 1;
      pi.len[rest] = clen - 1;
      for (int p = rest; p < cstart + clen; ++p) pi.cs[p] = rest;
    }
  }
};

}  // namespace

CanonResult canonical_label(const ColoredGraph& g, long long node_budget) {
  ColoredGraph gg = g;
  for (auto& a : gg.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  Search s(gg, node_budget);
  return s.run();
}

}  // namespace gq
