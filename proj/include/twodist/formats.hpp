#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twodist/graph.hpp"

namespace twodist {

// Graph without an embedding, as decoded from graph6. adj is sorted.
struct AbstractGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  int edge_count() const;
};

AbstractGraph to_abstract(const PlanarGraph& g);

// graph6: optional ">>graph6<<" header, N(n) as one byte n+63 for n <= 62 or
// '~' plus an 18-bit big-endian count, then the upper triangle in column
// order, 6 bits per byte, each byte offset by 63. Padding bits must be zero.
// The 36-bit '~~' count form is rejected.
AbstractGraph parse_graph6(const std::string& line);
std::string write_graph6(const AbstractGraph& a);

// planar_code: optional ">>planar_code<<" header, then per graph one vertex
// count byte followed, for each vertex, by its neighbours in rotation order
// as 1-based bytes closed with a 0 byte. Counts above 255 are not supported.
std::vector<PlanarGraph> parse_planar_code(const std::string& bytes);
std::string write_planar_code(const std::vector<PlanarGraph>& gs, bool header = true);

// Rotation sidecar for graph6 inputs: line v holds the neighbours of vertex v
// (0-based) in cyclic order.
std::vector<std::vector<int>> parse_rotation_lines(const std::string& text);
std::string write_rotation_lines(const PlanarGraph& g);
PlanarGraph graph_with_rotations(const AbstractGraph& a,
                                 const std::vector<std::vector<int>>& rot);

// Coloring files: one "vertex color" pair per line, 0-based vertices,
// 1-based colors. Blank lines are allowed.
std::vector<std::pair<int, int>> parse_coloring_lines(const std::string& text);
std::string write_coloring_lines(const std::vector<int>& color);  // 0 = uncolored

}  // namespace twodist
