#include "gq/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gq {

using nlohmann::json;

std::string geometry_to_json(const Geometry& g) {
  json j;
  j["points"] = g.num_points();
  std::vector<std::vector<int>> lines;
  for (int l = 0; l < g.num_lines(); ++l) lines.push_back(g.line_points(l));
  std::sort(lines.begin(), lines.end());
  j["lines"] = lines;
  json labels = json::object();
  if (!g.point_labels.empty()) {
    json pl = json::object();
    for (auto& [p, s] : g.point_labels) pl[std::to_string(p)] = s;
    labels["points"] = pl;
  }
  if (!g.line_labels.empty()) {
    json ll = json::object();
    for (auto& [l, s] : g.line_labels) ll[std::to_string(l)] = s;
    labels["lines"] = ll;
  }
  if (!g.note.empty()) labels["note"] = g.note;
  if (!g.empty_line_marks.empty()) {
    json em = json::array();
    for (auto& m : g.empty_line_marks) em.push_back(m.origin);
    labels["empty_lines"] = em;
  }
  if (!g.hairy_point_marks.empty()) {
    json hm = json::array();
    for (auto& m : g.hairy_point_marks) hm.push_back({{"point", m.point}, {"origin", m.origin}});
    labels["hairy_points"] = hm;
  }
  j["labels"] = labels;
  return j.dump(2) + "\n";
}

Geometry geometry_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(Err::IOError, std::string("bad geometry JSON: ") + e.what());
  }
  require(j.contains("points") && j.contains("lines"), Err::IOError,
          "geometry JSON needs points and lines");
  int n = j["points"].get<int>();
  std::vector<std::vector<int>> lines;
  for (auto& l : j["lines"]) lines.push_back(l.get<std::vector<int>>());
  Geometry g = Geometry::create(n, lines);
  if (j.contains("labels")) {
    auto& labels = j["labels"];
    if (labels.contains("points"))
      for (auto& [k, v] : labels["points"].items())
        g.point_labels[std::stoi(k)] = v.get<std::string>();
    if (labels.contains("lines"))
      for (auto& [k, v] : labels["lines"].items())
        g.line_labels[std::stoi(k)] = v.get<std::string>();
    if (labels.contains("note")) g.note = labels["note"].get<std::string>();
    if (labels.contains("empty_lines"))
      for (auto& m : labels["empty_lines"]) g.empty_line_marks.push_back({m.get<std::string>()});
    if (labels.contains("hairy_points"))
      for (auto& m : labels["hairy_points"])
        g.hairy_point_marks.push_back(
            {m["point"].get<int>(), m["origin"].get<std::string>()});
  }
  return g;
}

void save_geometry(const Geometry& g, const std::string& path) {
  std::ofstream out(path);
  require(bool(out), Err::IOError, "cannot open " + path);
  out << geometry_to_json(g);
}

Geometry load_geometry(const std::string& path) {
  std::ifstream in(path);
  require(bool(in), Err::IOError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return geometry_from_json(ss.str());
}

std::string collinearity_dot(const Geometry& g) {
  std::ostringstream out;
  out << "graph collinearity {\n";
  for (int p = 0; p < g.num_points(); ++p) {
    out << "  p" << p << " [label=\"" << p << "\"];\n";
    out << "  p" << p << " -- p" << p << ";\n";  // every vertex adjacent to itself
  }
  for (int p = 0; p < g.num_points(); ++p)
    for (int q = p + 1; q < g.num_points(); ++q)
      if (g.are_collinear(p, q)) out << "  p" << p << " -- p" << q << ";\n";
  out << "}\n";
  return out.str();
}

std::string incidence_dot(const Geometry& g) {
  std::ostringstream out;
  out << "graph incidence {\n";
  for (int p = 0; p < g.num_points(); ++p)
    out << "  p" << p << " [shape=circle,label=\"" << p << "\"];\n";
  for (int l = 0; l < g.num_lines(); ++l)
    out << "  l" << l << " [shape=box,label=\"L" << l << "\"];\n";
  for (int l = 0; l < g.num_lines(); ++l)
    for (int p : g.line_points(l)) out << "  p" << p << " -- l" << l << ";\n";
  out << "}\n";
  return out.str();
}

uint64_t file_fingerprint(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gq
