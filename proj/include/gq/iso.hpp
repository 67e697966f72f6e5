#ifndef GQ_ISO_HPP
#define GQ_ISO_HPP

#include <optional>
#include <string>
#include <vector>

#include "gq/canonical.hpp"
#include "gq/geometry.hpp"
#include "gq/perm.hpp"

namespace gq {

// Canonical adjacency encoding of the 2-colored incidence graph (points one
// color, lines the other). Equal certificates <=> isomorphic geometries.
struct CanonicalCertificate {
  std::string bytes;
  uint64_t hash = 0;
  std::vector<int> point_pos;  // point -> canonical position
  std::vector<int> line_pos;   // line -> canonical position
  bool operator==(const CanonicalCertificate& o) const { return bytes == o.bytes; }
};

ColoredGraph incidence_graph(const Geometry& g);

CanonicalCertificate canonical_form(const Geometry& g);
// Extra colors mark distinguished elements: the pair (marked, ambient) is
// canonicalized jointly. Unmarked elements use colors 0/1, marked ones 2/3;
// per-element integer classes can refine further (e.g. typed trace lines,
// hairy-point marks).
CanonicalCertificate canonical_form_marked(const Geometry& g, const Bitset& marked_points,
                                           const Bitset& marked_lines,
                                           const std::vector<int>* line_classes = nullptr,
                                           const std::vector<int>* point_classes = nullptr);

struct ElementMap {
  std::vector<int> point_map;
  std::vector<int> line_map;
};

// Isomorphism G -> H realized explicitly when the certificates agree; the map
// is re-verified against the incidence relations before being returned.
std::optional<ElementMap> are_isomorphic(const Geometry& g, const Geometry& h);

// Full type-preserving automorphism group on the domain points .. points+lines.
PermGroup automorphisms(const Geometry& g);

// Setwise stabilizer of a set of domain elements, restricted to that set,
// plus the order of the kernel of the restriction.
std::pair<PermGroup, unsigned long long> stabilizer_induced(const Geometry& g,
                                                            const PermGroup& aut,
                                                            const std::vector<int>& elements);

// A line together with the permutation group Aut(X)_U / kernel induced on its
// points: the IDEA-2 data of the anchored line (U, X).
struct AnchoredLine {
  int line = -1;
  int points_on_line = 0;
  PermGroup induced;
  unsigned long long kernel = 1;
};

AnchoredLine anchored_line(const Geometry& g, const PermGroup& aut, int line);

bool idea2_isomorphic_lines(const AnchoredLine& a, const AnchoredLine& b);

}  // namespace gq

#endif
