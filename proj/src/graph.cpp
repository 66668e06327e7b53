#include "twodist/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

namespace twodist {

namespace {

std::string dart_str(int u, int v) {
  return "(" + std::to_string(u) + "->" + std::to_string(v) + ")";
}

void validate_rotations(int n, const std::vector<std::vector<int>>& rot) {
  if (static_cast<int>(rot.size()) != n)
    throw ValidationError("rotation table has " + std::to_string(rot.size()) +
                          " rows, expected " + std::to_string(n));
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (int u : rot[v]) {
      if (u < 0 || u >= n)
        throw ValidationError("dart " + dart_str(v, u) + " leaves vertex range");
      if (u == v) throw ValidationError("self-loop dart " + dart_str(v, u));
      if (!seen.insert(u).second)
        throw ValidationError("duplicate dart " + dart_str(v, u));
    }
  }
  for (int v = 0; v < n; ++v)
    for (int u : rot[v]) {
      if (std::find(rot[u].begin(), rot[u].end(), v) == rot[u].end())
        throw ValidationError("asymmetric rotation: dart " + dart_str(v, u) +
                              " has no partner " + dart_str(u, v));
    }
}

}  // namespace

int PlanarGraph::edge_count() const {
  int s = 0;
  for (const auto& r : rot) s += static_cast<int>(r.size());
  return s / 2;
}

bool PlanarGraph::adjacent(int u, int v) const {
  return std::find(rot[u].begin(), rot[u].end(), v) != rot[u].end();
}

PlanarGraph from_rotations(const std::vector<std::vector<int>>& rotations) {
  PlanarGraph g;
  g.n = static_cast<int>(rotations.size());
  validate_rotations(g.n, rotations);
  g.rot = rotations;
  trace_faces(g);
  return g;
}

PlanarGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<std::vector<int>>& rotations) {
  validate_rotations(n, rotations);
  std::set<std::pair<int, int>> from_rot, from_edges;
  for (int v = 0; v < n; ++v)
    for (int u : rotations[v]) from_rot.insert(std::minmax(u, v));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw ValidationError("bad edge " + dart_str(u, v));
    if (!from_edges.insert(std::minmax(u, v)).second)
      throw ValidationError("duplicate edge " + dart_str(u, v));
  }
  if (from_rot != from_edges) {
    for (auto [u, v] : from_edges)
      if (!from_rot.count({u, v}))
        throw ValidationError("edge " + dart_str(u, v) + " missing from rotations");
    for (auto [u, v] : from_rot)
      if (!from_edges.count({u, v}))
        throw ValidationError("rotation dart " + dart_str(u, v) + " not in edge list");
  }
  PlanarGraph g;
  g.n = n;
  g.rot = rotations;
  trace_faces(g);
  return g;
}

PlanarGraph from_adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> rot(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw ValidationError("bad edge " + dart_str(u, v));
    if (!seen.insert(std::minmax(u, v)).second)
      throw ValidationError("duplicate edge " + dart_str(u, v));
    rot[u].push_back(v);
    rot[v].push_back(u);
  }
  for (auto& r : rot) std::sort(r.begin(), r.end());
  PlanarGraph g;
  g.n = n;
  g.rot = std::move(rot);
  trace_faces(g);
  return g;
}

std::vector<Face> traced_faces(const PlanarGraph& g) {
  // Successor convention: the dart after (u -> v) is (v -> w) where w follows
  // u in the rotation at v.
  std::vector<std::vector<int>> pos(g.n);
  for (int v = 0; v < g.n; ++v) {
    pos[v].assign(g.n, -1);
    for (int i = 0; i < g.degree(v); ++i) pos[v][g.rot[v][i]] = i;
  }
  std::vector<std::vector<char>> used(g.n);
  for (int v = 0; v < g.n; ++v) used[v].assign(g.rot[v].size(), 0);

  std::vector<Face> faces;
  for (int v = 0; v < g.n; ++v)
    for (int i = 0; i < g.degree(v); ++i) {
      if (used[v][i]) continue;
      Face f;
      int cu = v, ci = i;
      while (!used[cu][ci]) {
        used[cu][ci] = 1;
        int cv = g.rot[cu][ci];
        f.boundary.push_back({cu, cv});
        int j = pos[cv][cu];
        ci = (j + 1) % g.degree(cv);
        cu = cv;
      }
      faces.push_back(std::move(f));
    }
  return faces;
}

const std::vector<Face>& trace_faces(PlanarGraph& g) {
  g.faces = traced_faces(g);
  return g.faces;
}

int component_count(const PlanarGraph& g) {
  std::vector<char> vis(g.n, 0);
  int comps = 0;
  for (int s = 0; s < g.n; ++s) {
    if (vis[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    vis[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.rot[v])
        if (!vis[u]) {
          vis[u] = 1;
          q.push(u);
        }
    }
  }
  return comps;
}

bool connected(const PlanarGraph& g) { return component_count(g) <= 1; }

bool euler_ok(const PlanarGraph& g) {
  auto faces = traced_faces(g);
  // Assign each face to the component of its first dart, then check Euler
  // per component: V - E + F == 2.
  std::vector<int> comp(g.n, -1);
  int comps = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = comps;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.rot[v])
        if (comp[u] < 0) {
          comp[u] = comps;
          q.push(u);
        }
    }
    ++comps;
  }
  std::vector<long long> V(comps, 0), E(comps, 0), F(comps, 0);
  for (int v = 0; v < g.n; ++v) {
    V[comp[v]]++;
    E[comp[v]] += g.degree(v);
  }
  for (const auto& f : faces)
    if (!f.boundary.empty()) F[comp[f.boundary[0].from]]++;
  for (int c = 0; c < comps; ++c)
    if (V[c] - E[c] / 2 + F[c] != 2) return false;
  return true;
}

int max_degree(const PlanarGraph& g) {
  int d = 0;
  for (int v = 0; v < g.n; ++v) d = std::max(d, g.degree(v));
  return d;
}

std::optional<int> girth(const PlanarGraph& g) {
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(g.n), par(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(par.begin(), par.end(), -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (2 * dist[v] >= best) continue;
      for (int u : g.rot[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          par[u] = v;
          q.push(u);
        } else if (u != par[v]) {
          best = std::min(best, dist[v] + dist[u] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int big_d(const PlanarGraph& g, int v) {
  int s = 0;
  for (int u : g.rot[v]) s += g.degree(u);
  return s;
}

int count_neighbors_of_degree(const PlanarGraph& g, int v, int k) {
  int c = 0;
  for (int u : g.rot[v])
    if (g.degree(u) == k) ++c;
  return c;
}

std::vector<int> dist2_neighborhood(const PlanarGraph& g, int v) {
  std::set<int> ball;
  for (int u : g.rot[v]) {
    ball.insert(u);
    for (int w : g.rot[u]) ball.insert(w);
  }
  ball.erase(v);
  return {ball.begin(), ball.end()};
}

std::vector<std::vector<int>> square_graph(const PlanarGraph& g) {
  std::vector<std::vector<int>> sq(g.n);
  for (int v = 0; v < g.n; ++v) sq[v] = dist2_neighborhood(g, v);
  return sq;
}

PlanarGraph delete_vertex(const PlanarGraph& g, int v) {
  if (v < 0 || v >= g.n) throw ValidationError("delete_vertex: no vertex " + std::to_string(v));
  PlanarGraph h;
  h.n = g.n - 1;
  h.rot.reserve(h.n);
  for (int x = 0; x < g.n; ++x) {
    if (x == v) continue;
    std::vector<int> r;
    r.reserve(g.rot[x].size());
    for (int u : g.rot[x]) {
      if (u == v) continue;
      r.push_back(u > v ? u - 1 : u);
    }
    h.rot.push_back(std::move(r));
  }
  trace_faces(h);
  return h;
}

}  // namespace twodist
