#include "twodist/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace twodist {

namespace {

// Rotations from a straight-line drawing: neighbours sorted by angle.
PlanarGraph from_coords(const std::vector<std::pair<double, double>>& xy,
                        const std::vector<std::pair<int, int>>& edges) {
  int n = static_cast<int>(xy.size());
  std::vector<std::vector<int>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(rot[v].begin(), rot[v].end(), [&](int p, int q) {
      double ap = std::atan2(xy[p].second - xy[v].second, xy[p].first - xy[v].first);
      double aq = std::atan2(xy[q].second - xy[v].second, xy[q].first - xy[v].first);
      return ap < aq;
    });
  }
  return from_rotations(rot);
}

// Attaches a leaf to every degree-2 vertex, so that a later full subdivision
// cannot produce adjacent 2-vertices.
PlanarGraph thorn(const PlanarGraph& g) {
  auto rot = g.rot;
  int n = g.n;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) == 2) {
      rot[v].push_back(n);
      rot.push_back({v});
      ++n;
    }
  }
  return from_rotations(rot);
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

PlanarGraph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path_graph: k >= 1 required");
  std::vector<std::vector<int>> rot(k);
  for (int i = 0; i + 1 < k; ++i) {
    rot[i].push_back(i + 1);
    rot[i + 1].push_back(i);
  }
  return from_rotations(rot);
}

PlanarGraph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle: k >= 3 required");
  std::vector<std::vector<int>> rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + k - 1) % k, (i + 1) % k};
  return from_rotations(rot);
}

PlanarGraph star(int k) {
  if (k < 1) throw std::invalid_argument("star: k >= 1 required");
  std::vector<std::vector<int>> rot(k + 1);
  for (int i = 1; i <= k; ++i) {
    rot[0].push_back(i);
    rot[i] = {0};
  }
  return from_rotations(rot);
}

PlanarGraph wheel(int k) {
  if (k < 3) throw std::invalid_argument("wheel: k >= 3 required");
  std::vector<std::vector<int>> rot(k + 1);
  for (int i = 1; i <= k; ++i) {
    rot[0].push_back(i);
    int prev = (i == 1) ? k : i - 1;
    int next = (i == k) ? 1 : i + 1;
    rot[i] = {0, prev, next};
  }
  return from_rotations(rot);
}

PlanarGraph prism(int k) {
  if (k < 3) throw std::invalid_argument("prism: k >= 3 required");
  std::vector<std::pair<double, double>> xy;
  std::vector<std::pair<int, int>> edges;
  const double tau = 8.0 * std::atan(1.0);
  for (int r = 0; r < 2; ++r)
    for (int i = 0; i < k; ++i) {
      double rad = r == 0 ? 2.0 : 1.0;
      xy.emplace_back(rad * std::cos(tau * i / k), rad * std::sin(tau * i / k));
    }
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, (i + 1) % k);
    edges.emplace_back(k + i, k + (i + 1) % k);
    edges.emplace_back(i, k + i);
  }
  return from_coords(xy, edges);
}

PlanarGraph k4() { return wheel(3); }

PlanarGraph subdivide_all_edges(const PlanarGraph& g) {
  std::map<std::pair<int, int>, int> mid;
  int next = g.n;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.rot[v])
      if (v < u) mid[{v, u}] = next++;
  std::vector<std::vector<int>> rot(next);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.rot[v]) rot[v].push_back(mid.at(std::minmax(v, u)));
  for (const auto& [e, x] : mid) rot[x] = {e.first, e.second};
  return from_rotations(rot);
}

PlanarGraph stacked_triangulation(Rng& rng, int hub_degree, int extra,
                                  int deletions) {
  if (hub_degree < 3) throw std::invalid_argument("stacked_triangulation: hub_degree >= 3");
  PlanarGraph g = k4();
  auto stack_face = [&](int fi) {
    int a = g.faces[fi].boundary[0].from;
    int b = g.faces[fi].boundary[1].from;
    int c = g.faces[fi].boundary[2].from;
    int x = g.n;
    auto ins = [&](int at, int after) {
      auto& r = g.rot[at];
      r.insert(std::next(std::find(r.begin(), r.end(), after)), x);
    };
    ins(a, c);
    ins(b, a);
    ins(c, b);
    g.rot.push_back({a, c, b});
    ++g.n;
    trace_faces(g);
  };
  while (g.degree(0) < hub_degree) {
    std::vector<int> cands;
    for (int i = 0; i < static_cast<int>(g.faces.size()); ++i)
      for (const Dart& d : g.faces[i].boundary)
        if (d.from == 0) {
          cands.push_back(i);
          break;
        }
    stack_face(cands[rnd_below(rng, cands.size())]);
  }
  for (int i = 0; i < extra; ++i)
    stack_face(static_cast<int>(rnd_below(rng, g.faces.size())));
  for (int i = 0; i < deletions; ++i) {
    std::vector<std::pair<int, int>> cands;
    for (int v = 1; v < g.n; ++v)
      for (int u : g.rot[v])
        if (u > v && g.degree(v) > 3 && g.degree(u) > 3) cands.push_back({v, u});
    if (cands.empty()) break;
    auto [v, u] = cands[rnd_below(rng, cands.size())];
    auto& rv = g.rot[v];
    auto& ru = g.rot[u];
    int pv = static_cast<int>(std::find(rv.begin(), rv.end(), u) - rv.begin());
    int pu = static_cast<int>(std::find(ru.begin(), ru.end(), v) - ru.begin());
    rv.erase(rv.begin() + pv);
    ru.erase(ru.begin() + pu);
    if (!connected(g)) {
      rv.insert(rv.begin() + pv, u);
      ru.insert(ru.begin() + pu, v);
      continue;
    }
    trace_faces(g);
  }
  return from_rotations(g.rot);
}

PlanarGraph hex_chain(Rng& rng, int half_len, int hubs) {
  if (half_len < 2 || half_len % 2 != 0)
    throw std::invalid_argument("hex_chain: half_len must be even and >= 2");
  const int off = half_len + 1;
  std::vector<std::pair<double, double>> xy;
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < 2; ++r)
    for (int j = 0; j <= half_len; ++j) xy.emplace_back(j, 1 - r);
  for (int j = 0; j < half_len; ++j) {
    edges.emplace_back(j, j + 1);
    edges.emplace_back(off + j, off + j + 1);
  }
  for (int j = 0; j <= half_len; j += 2) edges.emplace_back(j, off + j);
  PlanarGraph base = from_coords(xy, edges);

  auto rot = base.rot;
  int n = base.n;
  auto deg = [&](int v) { return static_cast<int>(rot[v].size()); };
  auto pendant = [&](int at) {
    int a = n, b = n + 1;
    rot[at].insert(rot[at].begin() + rnd_below(rng, rot[at].size() + 1), a);
    rot.push_back({at, b});
    rot.push_back({a});
    n += 2;
  };

  const int budget = 26;
  std::vector<int> cands(2 * off);
  for (int i = 0; i < 2 * off; ++i) cands[i] = i;
  shuffle_vec(rng, cands);
  std::stable_sort(cands.begin(), cands.end(),
                   [&](int a, int b) { return deg(a) > deg(b); });
  int made = 0;
  for (int v : cands) {
    if (made == hubs) break;
    if (n + 2 * (6 - deg(v)) > budget) continue;
    while (deg(v) < 6) pendant(v);
    ++made;
  }
  int spare = (budget - n) / 2;
  int extra = spare > 0 ? rnd_int(rng, 0, spare) : 0;
  for (int i = 0; i < extra; ++i)
    for (int tries = 0; tries < 20; ++tries) {
      int v = static_cast<int>(rnd_below(rng, 2 * off));
      if (deg(v) < 6) {
        pendant(v);
        break;
      }
    }
  return from_rotations(rot);
}

PlanarGraph random_tree_hub(Rng& rng, int n, int hub_degree) {
  if (hub_degree < 1 || n < hub_degree + 1)
    throw std::invalid_argument("random_tree_hub: need n >= hub_degree + 1");
  std::vector<std::vector<int>> rot(n);
  auto link = [&](int a, int b) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  };
  for (int v = 1; v <= hub_degree; ++v) link(0, v);
  for (int v = hub_degree + 1; v < n; ++v) {
    std::vector<int> cands;
    for (int t = 1; t < v; ++t)
      if (static_cast<int>(rot[t].size()) < hub_degree) cands.push_back(t);
    link(cands[rnd_below(rng, cands.size())], v);
  }
  return from_rotations(rot);
}

PlanarGraph random_connected_graph(Rng& rng, int n, int extra) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: n >= 1");
  std::set<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) es.insert({static_cast<int>(rnd_below(rng, v)), v});
  int want = extra;
  for (int tries = 0; want > 0 && tries < 20 * extra + 100; ++tries) {
    int a = static_cast<int>(rnd_below(rng, n));
    int b = static_cast<int>(rnd_below(rng, n));
    if (a == b) continue;
    if (es.insert(std::minmax(a, b)).second) --want;
  }
  return from_adjacency(n, {es.begin(), es.end()});
}

std::string wl_hash(const PlanarGraph& g) {
  std::vector<std::uint64_t> col(g.n), nxt(g.n);
  for (int v = 0; v < g.n; ++v) col[v] = splitmix(0x5eed + static_cast<std::uint64_t>(g.degree(v)));
  for (int round = 0; round < 3; ++round) {
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::uint64_t> nb;
      nb.reserve(g.rot[v].size());
      for (int u : g.rot[v]) nb.push_back(col[u]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = splitmix(col[v]);
      for (std::uint64_t x : nb) h = splitmix(h ^ x);
      nxt[v] = h;
    }
    col.swap(nxt);
  }
  std::sort(col.begin(), col.end());
  std::uint64_t h = splitmix(static_cast<std::uint64_t>(g.n) * 1000003ULL +
                             static_cast<std::uint64_t>(g.edge_count()));
  for (std::uint64_t x : col) h = splitmix(h ^ x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct AdjBuilder {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  int add() { return n++; }
  void link(int a, int b) { edges.emplace_back(a, b); }
  int leaf(int at) {
    int x = add();
    link(at, x);
    return x;
  }
  void pad(int v, int k) {
    for (int i = 0; i < k; ++i) leaf(v);
  }
  // New vertex of degree deg hanging off `attach`.
  int hub(int attach, int deg) {
    int h = add();
    link(attach, h);
    pad(h, deg - 1);
    return h;
  }
  PlanarGraph build() const { return from_adjacency(n, edges); }
};

// 2-path at - a - b; returns a (the 2-vertex).
int path2(AdjBuilder& b, int at) {
  int a = b.add();
  int tail = b.add();
  b.link(at, a);
  b.link(a, tail);
  return a;
}

}  // namespace

ProcedureInstance make_instance(ProcedureId p, Rng& rng) {
  AdjBuilder b;
  ConfigurationWitness w;
  w.proc = p;
  switch (p) {
    case ProcedureId::adj2: {
      int k = rnd_int(rng, 9, 14);
      for (int i = 0; i < k; ++i) b.add();
      for (int i = 0; i < k; ++i) b.link(i, (i + 1) % k);
      b.hub(4, rnd_int(rng, 5, 8));
      for (int i = rnd_int(rng, 0, 3); i > 0; --i) path2(b, rnd_int(rng, 3, k - 3));
      w.deletion_vertex = 0;
      w.cast = {0, 1, k - 1, 2};
      break;
    }
    case ProcedureId::two_next_to_three: {
      int v = b.add(), ww = b.add(), z = b.add();
      b.link(v, ww);
      b.link(v, z);
      int a = b.leaf(ww);
      b.leaf(ww);
      b.pad(z, rnd_int(rng, 2, 7));
      b.pad(a, rnd_int(rng, 0, 2));
      w.deletion_vertex = v;
      w.cast = {v, ww, z};
      break;
    }
    case ProcedureId::deg3_lowd: {
      int v = b.add(), u = b.add(), ww = b.add();
      b.link(v, u);
      b.link(u, ww);
      int a = b.leaf(v), bb = b.leaf(v);
      b.pad(ww, rnd_int(rng, 4, 7));
      b.pad(a, rnd_int(rng, 0, 2));
      b.pad(bb, rnd_int(rng, 0, 1));
      w.deletion_vertex = u;
      w.cast = {u, v, ww};
      break;
    }
    case ProcedureId::deg3_31chain: {
      int v = b.add(), u = b.add(), ww = b.add(), z = b.add(), t = b.add();
      b.link(v, u);
      b.link(u, ww);
      b.link(v, z);
      b.link(z, t);
      b.leaf(z);
      int c = b.leaf(t);
      int a = b.leaf(v);
      b.pad(ww, rnd_int(rng, 4, 7));
      b.pad(a, rnd_int(rng, 0, 4));
      b.pad(c, rnd_int(rng, 0, 2));
      w.deletion_vertex = u;
      w.cast = {u, v, z, t, ww};
      break;
    }
    case ProcedureId::deg4_lowd: {
      int v = b.add(), u = b.add(), ww = b.add();
      b.link(v, u);
      b.link(u, ww);
      int a = b.leaf(v);
      b.leaf(v);
      b.leaf(v);
      b.pad(ww, rnd_int(rng, 4, 7));
      b.pad(a, rnd_int(rng, 0, 2));
      w.deletion_vertex = u;
      w.cast = {u, v, ww};
      break;
    }
    case ProcedureId::deg4_31: {
      int v = b.add(), u = b.add(), ww = b.add(), z = b.add(), t = b.add();
      b.link(v, u);
      b.link(u, ww);
      b.link(v, z);
      b.link(z, t);
      b.leaf(z);
      b.leaf(t);
      int a = b.leaf(v);
      b.leaf(v);
      b.pad(ww, rnd_int(rng, 4, 7));
      b.pad(a, rnd_int(rng, 0, 1));
      w.deletion_vertex = u;
      w.cast = {u, v, z, t, ww};
      break;
    }
    case ProcedureId::deg4_three31: {
      int v = b.add(), u = b.add(), ww = b.add();
      b.link(v, u);
      b.link(u, ww);
      b.pad(ww, rnd_int(rng, 4, 7));
      w.cast = {u, v};
      for (int i = 0; i < 3; ++i) {
        int z = b.add(), t = b.add();
        b.link(v, z);
        b.link(z, t);
        b.leaf(z);
        int c = b.leaf(t);
        b.pad(c, rnd_int(rng, 0, 1));
        w.cast.push_back(z);
        w.cast.push_back(t);
      }
      w.cast.push_back(ww);
      w.deletion_vertex = u;
      break;
    }
    case ProcedureId::special_d6_type12: {
      bool type_one = rnd_below(rng, 2) == 0;
      int v = b.add(), u1 = b.add(), z = b.add(), u2 = b.add(), q2 = b.add();
      b.link(u1, v);
      b.link(u1, z);
      b.link(u2, v);
      b.link(u2, q2);
      b.pad(z, rnd_int(rng, 0, 4));
      int s = b.add();
      b.link(v, s);
      b.pad(s, rnd_below(rng, 2) ? 3 : 4);
      b.hub(q2, 6);
      if (type_one) {
        int y = b.add(), t = b.add();
        b.link(v, y);
        b.link(y, t);
        b.leaf(y);
        int c = b.leaf(t);
        b.pad(c, rnd_int(rng, 0, 4));
        w.vtype = SpecialType::type_i;
        w.cast = {u1, v, z, u2, y, t};
      } else {
        int u3 = b.add();
        b.link(u3, v);
        b.leaf(u3);
        w.vtype = SpecialType::type_ii;
        w.cast = {u1, v, z, u2};
      }
      w.deletion_vertex = u1;
      break;
    }
    case ProcedureId::special_d6_type34: {
      bool type_three = rnd_below(rng, 2) == 0;
      int v = b.add(), u = b.add(), z = b.add();
      b.link(u, v);
      b.link(u, z);
      b.pad(z, rnd_int(rng, 0, 3));
      int u2 = b.add(), q2 = b.add();
      b.link(u2, v);
      b.link(u2, q2);
      for (int i = 0; i < 2; ++i) {
        int ui = b.add();
        b.link(ui, v);
        b.leaf(ui);
      }
      b.hub(q2, 6);
      if (type_three) {
        int y = b.add(), t = b.add();
        b.link(v, y);
        b.link(y, t);
        b.leaf(y);
        b.leaf(t);
        w.vtype = SpecialType::type_iii;
        w.cast = {u, v, z, y, t};
      } else {
        int u5 = b.add();
        b.link(u5, v);
        b.leaf(u5);
        w.vtype = SpecialType::type_iv;
        w.cast = {u, v, z};
      }
      w.deletion_vertex = u;
      break;
    }
    case ProcedureId::special_d7: {
      int which = rnd_int(rng, 0, 3);
      int dd = rnd_int(rng, 7, 9);
      int v = b.add(), u = b.add(), z = b.add();
      b.link(u, v);
      b.link(u, z);
      b.pad(z, rnd_int(rng, 0, 5));
      int u2 = b.add(), q2 = b.add();
      b.link(u2, v);
      b.link(u2, q2);
      b.hub(q2, dd);
      auto tail31 = [&]() {
        int y = b.add(), t = b.add();
        b.link(v, y);
        b.link(y, t);
        b.leaf(y);
        b.leaf(t);
        w.cast.push_back(y);
        w.cast.push_back(t);
      };
      auto two_neighbor = [&]() {
        int ui = b.add();
        b.link(ui, v);
        b.leaf(ui);
      };
      auto partner45 = [&]() {
        int s = b.add();
        b.link(v, s);
        b.pad(s, rnd_below(rng, 2) ? 3 : 4);
      };
      w.cast = {u, v, z};
      switch (which) {
        case 0:
          w.vtype = SpecialType::type_i;
          partner45();
          tail31();
          break;
        case 1:
          w.vtype = SpecialType::type_ii;
          two_neighbor();
          partner45();
          break;
        case 2:
          w.vtype = SpecialType::type_iii;
          two_neighbor();
          two_neighbor();
          tail31();
          break;
        default:
          w.vtype = SpecialType::type_iv;
          for (int i = 0; i < 3; ++i) two_neighbor();
          break;
      }
      w.deletion_vertex = u;
      break;
    }
    case ProcedureId::type2_54: {
      int u = b.add(), v = b.add(), ww = b.add(), z = b.add();
      b.link(u, v);
      b.link(u, ww);
      b.link(ww, z);
      b.pad(z, rnd_int(rng, 0, 4));
      for (int i = 0; i < 3; ++i) {
        int m = b.add();
        b.link(u, m);
        b.leaf(m);
      }
      int p1 = -1;
      for (int i = 0; i < 3; ++i) {
        int a = b.add();
        b.link(v, a);
        int pi = b.leaf(a);
        if (i == 0) p1 = pi;
      }
      b.hub(p1, rnd_int(rng, 7, 8));
      w.deletion_vertex = u;
      w.cast = {u, v, ww, z};
      break;
    }
  }
  PlanarGraph g = b.build();
  if (!connected(g)) throw std::logic_error("make_instance: disconnected gadget");
  verify_witness(g, w, max_degree(g));
  return {std::move(g), w};
}

std::vector<GeneratedGraph> generate_corpus(unsigned long long seed, int target) {
  Rng rng(seed);
  std::vector<GeneratedGraph> out;
  std::set<std::string> seen;
  int eligible_count = 0;

  auto eligible = [](const PlanarGraph& g) {
    if (g.n > 26 || max_degree(g) < 6) return false;
    auto gi = girth(g);
    return !gi || *gi >= 6;
  };
  auto push = [&](PlanarGraph g, const std::string& source, bool claims6) {
    if (!connected(g)) throw std::logic_error("corpus: disconnected graph from " + source);
    if (!euler_ok(g)) throw std::logic_error("corpus: non-planar rotations from " + source);
    if (claims6) {
      auto gi = girth(g);
      if (gi && *gi < 6) throw std::logic_error("corpus: girth claim broken by " + source);
    }
    if (!seen.insert(wl_hash(g)).second) return;
    if (eligible(g)) ++eligible_count;
    out.push_back({std::move(g), source, claims6});
  };
  auto subdivided = [&](const PlanarGraph& seed_graph, const std::string& source) {
    PlanarGraph s = thorn(seed_graph);
    PlanarGraph sub = subdivide_all_edges(s);
    auto gs = girth(s);
    auto gq = girth(sub);
    if (gs ? (!gq || *gq != 2 * *gs) : gq.has_value())
      throw std::logic_error("corpus: subdivision girth invariant broken by " + source);
    for (int v = 0; v < sub.n; ++v)
      if (sub.degree(v) == 2)
        for (int u : sub.rot[v])
          if (sub.degree(u) == 2)
            throw std::logic_error("corpus: adjacent 2-vertices after subdividing " + source);
    push(std::move(sub), source, true);
  };

  push(cycle(6), "cycle k=6", true);
  push(cycle(7), "cycle k=7", true);
  push(path_graph(4), "path k=4", true);
  for (int k = 3; k <= 8; ++k) subdivided(wheel(k), "subdivided wheel k=" + std::to_string(k));
  for (int k = 5; k <= 8; ++k) subdivided(star(k), "subdivided star k=" + std::to_string(k));
  for (int k = 3; k <= 5; ++k) subdivided(prism(k), "subdivided prism k=" + std::to_string(k));
  for (int i = 0; i < 12; ++i) {
    int n_seed = rnd_int(rng, 9, 12);
    int hub = rnd_int(rng, 6, 8);
    subdivided(stacked_triangulation(rng, hub, n_seed - 1 - hub, rnd_int(rng, 0, 3)),
               "subdivided triangulation (large seed)");
  }

  int spin = 0;
  const int cap = target * 30 + 1000;
  for (int attempts = 0; eligible_count < target && attempts < cap; ++attempts) {
    switch (spin++ % 4) {
      case 0:
      case 1:
        push(random_tree_hub(rng, rnd_int(rng, 13, 26), rnd_int(rng, 6, 8)), "hub tree", true);
        break;
      case 2:
        push(hex_chain(rng, 2 * rnd_int(rng, 1, 3), rnd_int(rng, 1, 2)), "hex chain", true);
        break;
      default: {
        int hub = rnd_int(rng, 6, 7);
        int extra = hub == 6 ? rnd_int(rng, 0, 1) : 0;
        subdivided(stacked_triangulation(rng, hub, extra, rnd_int(rng, 0, 2)),
                   "subdivided triangulation");
        break;
      }
    }
  }
  return out;
}

}  // namespace twodist
