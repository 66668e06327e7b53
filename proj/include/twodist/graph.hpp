#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twodist/errors.hpp"

namespace twodist {

struct Dart {
  int from = -1;
  int to = -1;
  bool operator==(const Dart&) const = default;
};

struct Face {
  std::vector<Dart> boundary;  // darts in trace order, with multiplicity
  int length() const { return static_cast<int>(boundary.size()); }
};

// Embedded graph given by a rotation system: rot[v] lists the neighbours of v
// in cyclic order. Simple graphs only. faces is filled by trace_faces (and by
// the builders); any mutation of rot invalidates it.
struct PlanarGraph {
  int n = 0;
  std::vector<std::vector<int>> rot;
  std::vector<Face> faces;

  int degree(int v) const { return static_cast<int>(rot[v].size()); }
  int edge_count() const;
  bool adjacent(int u, int v) const;
};

// Validates that rotations describe a simple symmetric graph and that the
// edge list matches them exactly. Errors name the offending dart.
PlanarGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<std::vector<int>>& rotations);

// Same validation, edge list derived from the rotations.
PlanarGraph from_rotations(const std::vector<std::vector<int>>& rotations);

// Fabricates rotations in ascending neighbour order. The result is a valid
// rotation system of *some* surface, not necessarily the plane; callers that
// need a genuine planar embedding must check euler_ok.
PlanarGraph from_adjacency(int n, const std::vector<std::pair<int, int>>& edges);

std::vector<Face> traced_faces(const PlanarGraph& g);
const std::vector<Face>& trace_faces(PlanarGraph& g);  // fills g.faces

bool connected(const PlanarGraph& g);
int component_count(const PlanarGraph& g);
// V - E + F == 2 per connected component, i.e. the rotation system is planar.
bool euler_ok(const PlanarGraph& g);

int max_degree(const PlanarGraph& g);
std::optional<int> girth(const PlanarGraph& g);  // nullopt for forests
int big_d(const PlanarGraph& g, int v);          // sum of neighbour degrees
int count_neighbors_of_degree(const PlanarGraph& g, int v, int k);
std::vector<int> dist2_neighborhood(const PlanarGraph& g, int v);  // sorted, without v
std::vector<std::vector<int>> square_graph(const PlanarGraph& g);  // sorted adjacency

// Removes v, renumbering every vertex x > v to x - 1 and keeping the cyclic
// order of the remaining neighbours. Faces are re-traced.
PlanarGraph delete_vertex(const PlanarGraph& g, int v);

}  // namespace twodist
