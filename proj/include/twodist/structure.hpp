#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twodist/graph.hpp"

namespace twodist {

enum class SpecialType { none, type_i, type_ii, type_iii, type_iv };

struct Badness {
  bool bad = false;
  bool semibad = false;
};

struct VertexProfile {
  int degree = 0;
  int two_neighbors = 0;  // the d of the k(d) notation
  bool poor_vertex = false;
  bool senior = false;
  SpecialType special = SpecialType::none;
  Badness badness;
};

VertexProfile classify_vertex(const PlanarGraph& g, int v);
bool is_31_vertex(const PlanarGraph& g, int v);   // 3-vertex with exactly one 2-neighbour
bool is_poor(const PlanarGraph& g, int v);        // 2-vertex or 3(1)-vertex
bool is_senior(const PlanarGraph& g, int v);      // 5-vertex with at most four poor neighbours
bool weak_adjacent(const PlanarGraph& g, int u, int w);
bool star_adjacent(const PlanarGraph& g, int u, int w);
SpecialType special_type(const PlanarGraph& g, int v);
Badness badness(const PlanarGraph& g, int v);

enum class ProcedureId {
  adj2,
  two_next_to_three,
  deg3_lowd,
  deg3_31chain,
  deg4_lowd,
  deg4_31,
  deg4_three31,
  special_d6_type12,
  special_d6_type34,
  special_d7,
  type2_54,
};
constexpr int kProcedureCount = 11;
const char* procedure_name(ProcedureId p);

// Cast layout by procedure (deletion vertex first unless noted):
//   adj2               {u, v, w, z}      u,v adjacent 2-vertices; w,z their other ends
//   two_next_to_three  {v, w, z}         v a 2-vertex, d(w) == 3, z the other end
//   deg3_lowd          {u, v, w}         v a 3-vertex with D(v) <= delta+4, u its
//                                        2-neighbour, w = u's other end
//   deg3_31chain       {u, v, z, t, w}   additionally z a 3-neighbour of v with
//                                        2-neighbour t != u
//   deg4_lowd          {u, v, w}         v a 4-vertex with D(v) <= delta+3
//   deg4_31            {u, v, z, t, w}   v a 4-vertex with D(v) <= delta+4, z a
//                                        3(1)-neighbour with 2-neighbour t != u
//   deg4_three31       {u, v, z1, t1, z2, t2, z3, t3, w}
//   special_d6_type12  {u1, v, z, u2} or {u1, v, z, u2, y, t} for type I
//   special_d6_type34  {u, v, z} or {u, v, z, y, t} for type III
//   special_d7         {u, v, z} (+ {y, t} for types I and III)
//   type2_54           {u, v, w, z}      u the 5(4)-vertex (deleted), v type II,
//                                        w the 2-vertex between u and z
// All cast members are pairwise distinct.
struct ConfigurationWitness {
  ProcedureId proc;
  int deletion_vertex;
  std::vector<int> cast;
  SpecialType vtype = SpecialType::none;
};

// A window of four contiguous boundary darts matching one of the degree
// patterns (delta,2,4,2,delta), (delta,2,5,2,delta), (delta,2,4,5,6+),
// the last also in reverse. path holds the five walk vertices in pattern
// orientation; the distinguished middle vertex is path[2].
struct CrucialWindow {
  std::array<int, 5> path;
  int variant;  // 0, 1, 2 in the order above
  int center() const { return path[2]; }
};

std::vector<CrucialWindow> crucial_windows(const PlanarGraph& g, const Face& f, int delta);
std::vector<int> f_crucial_vertices(const PlanarGraph& g, const Face& f, int delta);  // distinct, sorted

// First matching configuration by (procedure priority, vertex id, rotation
// position). two_next_to_three is never returned: its script extends a partial
// coloring of g itself, not a deleted-graph coloring, so it is a finishing
// move rather than a reduction. root_delta selects the special-vertex family
// and enters the degree-sum caps; it is the maximum degree at the top of the
// recursion, not of the current subgraph.
std::optional<ConfigurationWitness> find_reducible(const PlanarGraph& g, int root_delta);

// Re-checks every structural requirement a witness encodes (degrees,
// adjacencies, distinctness, degree-sum caps). Throws ValidationError.
void verify_witness(const PlanarGraph& g, const ConfigurationWitness& w, int root_delta);

}  // namespace twodist
