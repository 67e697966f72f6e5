#ifndef GQ_JSON_IO_HPP
#define GQ_JSON_IO_HPP

#include <string>

#include "gq/geometry.hpp"

namespace gq {

// Canonical geometry file: {"points": N, "lines": [[ids...]...], "labels": {...}},
// UTF-8, line arrays sorted ascending, lines sorted lexicographically.
std::string geometry_to_json(const Geometry& g);
Geometry geometry_from_json(const std::string& text);  // IOError on malformed input

void save_geometry(const Geometry& g, const std::string& path);
Geometry load_geometry(const std::string& path);

// DOT exports of the collinearity graph and the bipartite incidence graph.
std::string collinearity_dot(const Geometry& g);
std::string incidence_dot(const Geometry& g);

uint64_t file_fingerprint(const std::string& text);

}  // namespace gq

#endif
