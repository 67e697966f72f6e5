#ifndef GQ_CANONICAL_HPP
#define GQ_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gq/bitset.hpp"
#include "gq/common.hpp"

namespace gq {

struct ColoredGraph {
  int n = 0;
  std::vector<int> color;              // initial vertex colors
  std::vector<std::vector<int>> adj;   // sorted neighbour lists, no loops
  void add_edge(int u, int v);
  Bitset row(int v) const;
};

struct CanonResult {
  std::vector<int> canon_pos;                 // vertex -> position in canonical order
  std::string certificate;                    // colors + upper-triangular adjacency
  std::vector<std::vector<int>> generators;   // automorphism generators, img[v]
  long long nodes = 0;
};

// Exact canonical labeling by equitable-partition refinement with
// individualization and automorphism orbit pruning. Equal certificates
// characterize isomorphism of colored graphs.
CanonResult canonical_label(const ColoredGraph& g, long long node_budget = 40'000'000);

uint64_t fnv1a(const std::string& s);

}  // namespace gq

#endif
