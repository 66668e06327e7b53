#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twodist/graph.hpp"
#include "twodist/structure.hpp"

namespace twodist {

// color[v] in [1, palette], 0 = uncolored.
struct Coloring {
  std::vector<int> color;
  int palette = 0;
};

// Distinct colors present within distance 2 of v.
std::vector<int> forbidden_colors(const PlanarGraph& g, const Coloring& c, int v);
std::vector<int> available_colors(const PlanarGraph& g, const Coloring& c, int v);

// With require_total every vertex must be colored; otherwise uncolored
// vertices are unconstrained.
bool is_valid(const PlanarGraph& g, const Coloring& c, bool require_total);
// Same check, throwing ValidationError that names a conflicting vertex pair.
void validate_coloring(const PlanarGraph& g, const Coloring& c, bool require_total);

struct RecolorResult {
  bool ok = true;
  int stuck_vertex = -1;
  std::vector<int> forbidden;
};

// Decolors the listed vertices, then greedily recolors them in order with the
// lowest available color. Atomic: on failure the input coloring is untouched
// and the stuck vertex plus its forbidden set are reported.
RecolorResult recolor_chain(const PlanarGraph& g, Coloring& c, const std::vector<int>& order);

struct ExtensionStep {
  int vertex;
  int forbidden_count;
  int bound;    // per-step cap the script carries
  int chosen;   // color assigned
};
struct ExtensionTrace {
  std::vector<ExtensionStep> steps;
};

// Runs the catalog script for the witness on a coloring of G - u, where u is
// the deletion vertex: c.color[u] == 0 and every other vertex is colored.
// For every procedure except two_next_to_three the input must be valid as a
// total coloring of delete_vertex(g, u); vertices whose only connection runs
// through u may share a color, and the script repairs such clashes. For
// two_next_to_three the input must already be valid on g itself (a finishing
// move). Validates witness and input before touching anything; returns the
// completed coloring of G. Throws ScriptStuckError if some step has no
// available color. Bound fields in the trace record the per-step caps; they
// are not enforced here.
Coloring apply_extension(const PlanarGraph& g, const Coloring& c,
                         const ConfigurationWitness& w, ExtensionTrace* trace = nullptr);

struct Chi2Result {
  int chi2 = 0;       // best upper bound found; optimum when exact
  int lower = 0;      // best lower bound proven
  Coloring witness;   // canonical witness for chi2 colors
  bool exact = false;
  std::uint64_t nodes = 0;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

// Branch and bound over the square graph (DSATUR order, clique seed lower
// bound). Requires n <= 64. upper_hint, when given, is probed first.
Chi2Result exact_chi2(const PlanarGraph& g, std::optional<int> upper_hint = {},
                      Deadline deadline = {});

// Plain backtracking over vertices in index order; independent route from
// exact_chi2. Requires n <= 12 (CapExceededError beyond).
int brute_force_chi2(const PlanarGraph& g);

struct ConstructiveResult {
  bool ok = false;
  std::string reason;  // set when !ok: "budget", "script_stuck", ...
  Coloring coloring;
  int scripts = 0;    // catalog reductions applied
  int leaves = 0;     // degree <= 1 reductions
  int fallbacks = 0;  // subgraphs colored by direct search
};

// Colors g with max_degree(g) + 4 colors by reducing catalog configurations
// and direct search where no configuration exists. Requires girth >= 6 (or a
// forest) and max degree >= 6 unless override_hypothesis.
ConstructiveResult constructive_color(const PlanarGraph& g, bool override_hypothesis = false,
                                      Deadline deadline = {});

}  // namespace twodist
