#pragma once

#include <string>
#include <vector>

#include "twodist/graph.hpp"
#include "twodist/rng.hpp"
#include "twodist/structure.hpp"

namespace twodist {

// Seed families with planar rotation systems.
PlanarGraph path_graph(int k);
PlanarGraph cycle(int k);
PlanarGraph star(int k);    // K_{1,k}
PlanarGraph wheel(int k);   // hub 0, rim 1..k
PlanarGraph prism(int k);   // two concentric k-cycles plus rungs
PlanarGraph k4();

// Replaces every edge uv by a path u-x-v. Girth doubles, planarity is kept.
PlanarGraph subdivide_all_edges(const PlanarGraph& g);

// Plane triangulation grown from K4: vertex 0 is stacked up to hub_degree,
// then `extra` stacks land on random faces, then up to `deletions` edges away
// from vertex 0 are removed, keeping minimum degree 3 and connectivity.
PlanarGraph stacked_triangulation(Rng& rng, int hub_degree, int extra,
                                  int deletions);

// Ladder of hexagons with 2(half_len+1) rail vertices (half_len even), plus
// pendant 2-paths pushing `hubs` randomly chosen rail vertices to degree 6.
PlanarGraph hex_chain(Rng& rng, int half_len, int hubs);

// Random tree; vertex 0 gets degree exactly hub_degree, no vertex exceeds it.
PlanarGraph random_tree_hub(Rng& rng, int n, int hub_degree);

// Random connected simple graph (spanning tree plus `extra` edges) with
// fabricated rotations; for solver cross-checks, not necessarily planar.
PlanarGraph random_connected_graph(Rng& rng, int n, int extra);

// Relabeling-invariant digest (iterated degree refinement, 3 rounds).
std::string wl_hash(const PlanarGraph& g);

struct ProcedureInstance {
  PlanarGraph g;
  ConfigurationWitness w;
};

// Randomized instance meeting the procedure's preconditions; the returned
// witness passes verify_witness with root_delta = max_degree(g).
ProcedureInstance make_instance(ProcedureId p, Rng& rng);

struct GeneratedGraph {
  PlanarGraph g;
  std::string source;
  bool claims_girth6 = false;
};

// Deterministic corpus of roughly `target` graphs: subdivision family, hex
// chains, hub trees, plus small probes below the theorem hypotheses.
// Deduplicated by wl_hash; every family claim is re-verified on emission.
std::vector<GeneratedGraph> generate_corpus(unsigned long long seed, int target);

}  // namespace twodist
