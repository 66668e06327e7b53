#include "twodist/coloring.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>

namespace twodist {

std::vector<int> forbidden_colors(const PlanarGraph& g, const Coloring& c, int v) {
  std::set<int> forb;
  for (int u : dist2_neighborhood(g, v))
    if (c.color[u] != 0) forb.insert(c.color[u]);
  return {forb.begin(), forb.end()};
}

std::vector<int> available_colors(const PlanarGraph& g, const Coloring& c, int v) {
  std::vector<char> bad(c.palette + 1, 0);
  for (int u : dist2_neighborhood(g, v))
    if (c.color[u] != 0) bad[c.color[u]] = 1;
  std::vector<int> out;
  for (int k = 1; k <= c.palette; ++k)
    if (!bad[k]) out.push_back(k);
  return out;
}

namespace {

// First conflicting pair at distance <= 2, or {-1,-1}.
std::pair<int, int> find_conflict(const PlanarGraph& g, const Coloring& c) {
  for (int v = 0; v < g.n; ++v) {
    if (c.color[v] == 0) continue;
    for (int u : dist2_neighborhood(g, v))
      if (u > v && c.color[u] == c.color[v]) return {v, u};
  }
  return {-1, -1};
}

}  // namespace

bool is_valid(const PlanarGraph& g, const Coloring& c, bool require_total) {
  if (static_cast<int>(c.color.size()) != g.n) return false;
  for (int v = 0; v < g.n; ++v) {
    if (c.color[v] < 0 || c.color[v] > c.palette) return false;
    if (require_total && c.color[v] == 0) return false;
  }
  return find_conflict(g, c).first < 0;
}

void validate_coloring(const PlanarGraph& g, const Coloring& c, bool require_total) {
  if (static_cast<int>(c.color.size()) != g.n)
    throw ValidationError("coloring covers " + std::to_string(c.color.size()) +
                          " vertices, graph has " + std::to_string(g.n));
  for (int v = 0; v < g.n; ++v) {
    if (c.color[v] < 0 || c.color[v] > c.palette)
      throw ValidationError("vertex " + std::to_string(v) + " has color " +
                            std::to_string(c.color[v]) + " outside palette " +
                            std::to_string(c.palette));
    if (require_total && c.color[v] == 0)
      throw ValidationError("vertex " + std::to_string(v) + " is uncolored");
  }
  auto [a, b] = find_conflict(g, c);
  if (a >= 0)
    throw ValidationError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                          " are within distance 2 and share color " +
                          std::to_string(c.color[a]));
}

RecolorResult recolor_chain(const PlanarGraph& g, Coloring& c, const std::vector<int>& order) {
  Coloring work = c;
  for (int v : order) work.color[v] = 0;
  for (int v : order) {
    auto av = available_colors(g, work, v);
    if (av.empty()) {
      RecolorResult r;
      r.ok = false;
      r.stuck_vertex = v;
      r.forbidden = forbidden_colors(g, work, v);
      return r;
    }
    work.color[v] = av.front();
  }
  c = std::move(work);
  return {};
}

namespace {

struct ScriptRun {
  const PlanarGraph& g;
  Coloring c;
  ExtensionTrace* trace;

  void decolor(int v) { c.color[v] = 0; }

  void color(int v, int bound) {
    auto forb = forbidden_colors(g, c, v);
    int chosen = 0;
    std::vector<char> bad(c.palette + 1, 0);
    for (int k : forb) bad[k] = 1;
    for (int k = 1; k <= c.palette; ++k)
      if (!bad[k]) {
        chosen = k;
        break;
      }
    if (chosen == 0)
      throw ScriptStuckError("no color available for vertex " + std::to_string(v), v, forb);
    c.color[v] = chosen;
    if (trace) trace->steps.push_back({v, static_cast<int>(forb.size()), bound, chosen});
  }
};

}  // namespace

Coloring apply_extension(const PlanarGraph& g, const Coloring& c,
                         const ConfigurationWitness& w, ExtensionTrace* trace) {
  if (c.palette < max_degree(g) + 4)
    throw ValidationError("palette " + std::to_string(c.palette) +
                          " smaller than max degree + 4");
  int dd = c.palette - 4;
  verify_witness(g, w, dd);
  if (static_cast<int>(c.color.size()) != g.n)
    throw ValidationError("coloring size mismatch");
  if (c.color[w.deletion_vertex] != 0)
    throw ValidationError("deletion vertex " + std::to_string(w.deletion_vertex) +
                          " must be uncolored");
  for (int v = 0; v < g.n; ++v)
    if (v != w.deletion_vertex && c.color[v] == 0)
      throw ValidationError("vertex " + std::to_string(v) + " must be colored");
  if (w.proc == ProcedureId::two_next_to_three) {
    // Finishing move: the input must already be valid on g itself with only
    // the deletion vertex open, so pairs meeting through it are constrained.
    validate_coloring(g, c, false);
  } else {
    // Reduction move: the input is a coloring of the deleted graph. Pairs
    // whose only connection runs through the deletion vertex may collide;
    // the script repairs them.
    PlanarGraph del = delete_vertex(g, w.deletion_vertex);
    Coloring sub;
    sub.palette = c.palette;
    sub.color.reserve(del.n);
    for (int v = 0; v < g.n; ++v)
      if (v != w.deletion_vertex) sub.color.push_back(c.color[v]);
    validate_coloring(del, sub, true);
  }

  ScriptRun run{g, c, trace};
  const auto& cs = w.cast;
  switch (w.proc) {
    case ProcedureId::adj2: {
      int u = cs[0], v = cs[1], ww = cs[2];
      if (run.c.color[ww] == run.c.color[v]) {
        run.decolor(v);
        run.color(v, dd + 1);
      }
      run.color(u, dd + 2);
      break;
    }
    case ProcedureId::two_next_to_three: {
      run.color(cs[0], dd + 3);
      break;
    }
    case ProcedureId::deg3_lowd: {
      int u = cs[0], v = cs[1], ww = cs[2];
      if (run.c.color[ww] == run.c.color[v]) {
        run.decolor(v);
        run.color(v, dd + 3);
      }
      run.color(u, dd + 3);
      break;
    }
    case ProcedureId::deg3_31chain: {
      int u = cs[0], v = cs[1], t = cs[3], ww = cs[4];
      run.decolor(t);
      if (run.c.color[ww] == run.c.color[v]) {
        run.decolor(v);
        run.color(v, dd + 3);
      }
      run.color(u, dd + 3);
      run.color(t, dd + 3);
      break;
    }
    case ProcedureId::deg4_lowd: {
      int u = cs[0], v = cs[1];
      run.decolor(v);
      run.color(u, dd + 3);
      run.color(v, dd + 3);
      break;
    }
    case ProcedureId::deg4_31: {
      int u = cs[0], v = cs[1], t = cs[3];
      run.decolor(t);
      run.decolor(v);
      run.color(u, dd + 3);
      run.color(v, dd + 3);
      run.color(t, dd + 3);
      break;
    }
    case ProcedureId::deg4_three31: {
      int u = cs[0], v = cs[1];
      run.decolor(v);
      for (int i = 0; i < 3; ++i) run.decolor(cs[3 + 2 * i]);
      run.color(u, dd + 3);
      run.color(v, 8);
      for (int i = 0; i < 3; ++i) run.color(cs[3 + 2 * i], dd + 3);
      break;
    }
    case ProcedureId::special_d6_type12: {
      int u1 = cs[0], v = cs[1], u2 = cs[3];
      bool tail = w.vtype == SpecialType::type_i;
      int t = tail ? cs[5] : -1;
      if (tail) run.decolor(t);
      run.decolor(u2);
      run.decolor(v);
      run.color(v, 9);
      run.color(u2, 9);
      run.color(u1, 9);
      if (tail) run.color(t, 9);
      break;
    }
    case ProcedureId::special_d6_type34: {
      int u = cs[0], v = cs[1], z = cs[2];
      bool tail = w.vtype == SpecialType::type_iii;
      int t = tail ? cs[4] : -1;
      if (tail) run.decolor(t);
      if (run.c.color[z] == run.c.color[v]) {
        run.decolor(v);
        run.color(v, 9);
      }
      run.color(u, 9);
      if (tail) run.color(t, 9);
      break;
    }
    case ProcedureId::special_d7: {
      int u = cs[0], v = cs[1], z = cs[2];
      if (w.vtype == SpecialType::type_i || w.vtype == SpecialType::type_ii) {
        bool tail = w.vtype == SpecialType::type_i;
        int t = tail ? cs[4] : -1;
        if (tail) run.decolor(t);
        if (run.c.color[z] == run.c.color[v]) {
          run.decolor(v);
          run.color(v, 10);
        }
        run.color(u, dd + 3);
        if (tail) run.color(t, dd + 3);
      } else if (w.vtype == SpecialType::type_iii) {
        int t = cs[4];
        run.decolor(t);
        run.decolor(v);
        run.color(u, dd + 3);
        run.color(v, 10);
        run.color(t, dd + 3);
      } else {
        run.decolor(v);
        run.color(u, dd + 3);
        run.color(v, 10);
      }
      break;
    }
    case ProcedureId::type2_54: {
      int u = cs[0], v = cs[1], ww = cs[2];
      run.decolor(ww);
      run.decolor(v);
      run.color(u, 10);
      run.color(v, 10);
      run.color(ww, 10);
      // u is the deletion vertex, so its remaining 2-neighbours met nothing
      // through it in the input; clear any leftover clashes between them.
      for (int b : g.rot[u]) {
        if (b == v || b == ww) continue;
        bool clash = false;
        for (int a : g.rot[u])
          if (a != b && run.c.color[a] == run.c.color[b]) clash = true;
        if (!clash) continue;
        run.decolor(b);
        run.color(b, dd + 3);
      }
      break;
    }
  }
  validate_coloring(g, run.c, true);
  return run.c;
}

namespace {

struct SquareSolver {
  int n;
  std::vector<std::uint64_t> adj;  // square adjacency as bit masks
  std::vector<int> sqdeg;
  std::uint64_t nodes = 0;
  Deadline deadline;
  bool expired = false;

  explicit SquareSolver(const PlanarGraph& g, Deadline dl) : n(g.n), deadline(dl) {
    if (n > 64) throw CapExceededError("exact search limited to 64 vertices");
    auto sq = square_graph(g);
    adj.assign(n, 0);
    sqdeg.assign(n, 0);
    for (int v = 0; v < n; ++v) {
      for (int u : sq[v]) adj[v] |= std::uint64_t{1} << u;
      sqdeg[v] = static_cast<int>(sq[v].size());
    }
  }

  bool out_of_time() {
    if (!deadline) return false;
    if (expired) return true;
    if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() >= *deadline) expired = true;
    return expired;
  }

  // Greedy clique in the square graph seeded with N[s] of a max degree vertex.
  int clique_lower(const PlanarGraph& g) {
    if (n == 0) return 0;
    int s = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) > g.degree(s)) s = v;
    std::vector<int> clique = {s};
    for (int u : g.rot[s]) clique.push_back(u);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sqdeg[a] > sqdeg[b]; });
    for (int cand : order) {
      bool fits = true;
      for (int x : clique)
        if (x == cand || !(adj[x] >> cand & 1)) {
          fits = false;
          break;
        }
      if (fits) clique.push_back(cand);
    }
    return static_cast<int>(clique.size());
  }

  std::vector<int> greedy() {
    std::vector<int> col(n, 0);
    std::vector<std::uint64_t> used(n, 0);  // colors seen in square neighbourhood
    for (int step = 0; step < n; ++step) {
      int best = -1, bsat = -1;
      for (int v = 0; v < n; ++v) {
        if (col[v]) continue;
        int sat = std::popcount(used[v]);
        if (sat > bsat || (sat == bsat && (best < 0 || sqdeg[v] > sqdeg[best]))) {
          best = v;
          bsat = sat;
        }
      }
      int c = 1;
      while (used[best] >> (c - 1) & 1) ++c;
      col[best] = c;
      for (int u = 0; u < n; ++u)
        if (adj[best] >> u & 1) used[u] |= std::uint64_t{1} << (c - 1);
    }
    return col;
  }

  // 1 feasible (col filled), 0 infeasible, -1 deadline.
  int feasible(int k, std::vector<int>& col) {
    col.assign(n, 0);
    std::vector<std::uint64_t> used(n, 0);
    return place(0, k, 0, col, used);
  }

  int place(int depth, int k, int maxc, std::vector<int>& col,
            std::vector<std::uint64_t>& used) {
    if (depth == n) return 1;
    ++nodes;
    if (out_of_time()) return -1;
    int best = -1, bsat = -1;
    for (int v = 0; v < n; ++v) {
      if (col[v]) continue;
      int sat = std::popcount(used[v]);
      if (sat > bsat || (sat == bsat && (best < 0 || sqdeg[v] > sqdeg[best]))) {
        best = v;
        bsat = sat;
      }
    }
    int cap = std::min(k, maxc + 1);
    for (int c = 1; c <= cap; ++c) {
      if (used[best] >> (c - 1) & 1) continue;
      col[best] = c;
      std::vector<int> touched;
      for (int u = 0; u < n; ++u)
        if ((adj[best] >> u & 1) && !(used[u] >> (c - 1) & 1)) {
          used[u] |= std::uint64_t{1} << (c - 1);
          touched.push_back(u);
        }
      int r = place(depth + 1, k, std::max(maxc, c), col, used);
      if (r == 1) return 1;
      col[best] = 0;
      for (int u : touched) used[u] &= ~(std::uint64_t{1} << (c - 1));
      if (r == -1) return -1;
    }
    return 0;
  }
};

// Stable relabeling by first appearance in vertex order.
Coloring canonical_witness(const std::vector<int>& col, int palette) {
  Coloring c;
  c.palette = palette;
  c.color.assign(col.size(), 0);
  std::vector<int> remap;
  for (std::size_t v = 0; v < col.size(); ++v) {
    int k = col[v];
    auto it = std::find(remap.begin(), remap.end(), k);
    if (it == remap.end()) {
      remap.push_back(k);
      c.color[v] = static_cast<int>(remap.size());
    } else {
      c.color[v] = static_cast<int>(it - remap.begin()) + 1;
    }
  }
  return c;
}

}  // namespace

Chi2Result exact_chi2(const PlanarGraph& g, std::optional<int> upper_hint, Deadline deadline) {
  Chi2Result res;
  if (g.n == 0) {
    res.exact = true;
    return res;
  }
  SquareSolver s(g, deadline);
  int lb = std::max(1, s.clique_lower(g));
  auto best = s.greedy();
  int ub = *std::max_element(best.begin(), best.end());
  res.lower = lb;

  auto timed_out = [&](int proven_lower) {
    res.chi2 = ub;
    res.lower = proven_lower;
    res.witness = canonical_witness(best, ub);
    res.exact = false;
    res.nodes = s.nodes;
    return res;
  };

  // A feasibility probe at the hint can shrink the search band from either
  // side before the ascending sweep.
  if (upper_hint && *upper_hint >= lb && *upper_hint < ub) {
    std::vector<int> col;
    int r = s.feasible(*upper_hint, col);
    if (r == 1) {
      best = col;
      ub = *upper_hint;
    } else if (r == 0) {
      lb = *upper_hint + 1;
    } else {
      return timed_out(lb);
    }
  }
  for (int k = lb; k < ub; ++k) {
    std::vector<int> col;
    int r = s.feasible(k, col);
    if (r == 1) {
      best = col;
      ub = k;
      break;
    }
    if (r == -1) return timed_out(k);
  }
  res.chi2 = ub;
  res.lower = ub;
  res.exact = true;
  res.witness = canonical_witness(best, ub);
  res.nodes = s.nodes;
  return res;
}

int brute_force_chi2(const PlanarGraph& g) {
  if (g.n > 12) throw CapExceededError("brute force limited to 12 vertices");
  if (g.n == 0) return 0;
  auto sq = square_graph(g);
  std::vector<int> col(g.n, 0);

  auto ok_at = [&](int v, int c) {
    for (int u : sq[v])
      if (col[u] == c) return false;
    return true;
  };
  // Iterative deepening with the usual color symmetry cap.
  std::function<bool(int, int, int)> bt = [&](int v, int k, int used) {
    if (v == g.n) return true;
    int cap = std::min(k, used + 1);
    for (int c = 1; c <= cap; ++c) {
      if (!ok_at(v, c)) continue;
      col[v] = c;
      if (bt(v + 1, k, std::max(used, c))) return true;
      col[v] = 0;
    }
    return false;
  };
  for (int k = 1; k <= g.n; ++k) {
    std::fill(col.begin(), col.end(), 0);
    if (bt(0, k, 0)) return k;
  }
  return g.n;
}

namespace {

struct ConstructiveCtx {
  int palette;
  int root_delta;
  Deadline deadline;
  ConstructiveResult* out;

  bool expired() const {
    return deadline && std::chrono::steady_clock::now() >= *deadline;
  }

  // Colors g with at most palette colors; empty optional on failure with
  // out->reason set.
  std::optional<Coloring> solve(const PlanarGraph& g) {
    if (g.n == 0) return Coloring{{}, palette};
    if (expired()) {
      out->reason = "budget";
      return std::nullopt;
    }
    int low = -1;
    for (int v = 0; v < g.n && low < 0; ++v)
      if (g.degree(v) <= 1) low = v;
    if (low >= 0) {
      auto sub = solve(delete_vertex(g, low));
      if (!sub) return std::nullopt;
      Coloring c = lift(*sub, g.n, low);
      auto av = available_colors(g, c, low);
      if (av.empty()) {
        out->reason = "leaf_stuck";
        return std::nullopt;
      }
      c.color[low] = av.front();
      ++out->leaves;
      return c;
    }
    if (auto w = find_reducible(g, root_delta)) {
      auto sub = solve(delete_vertex(g, w->deletion_vertex));
      if (!sub) return std::nullopt;
      Coloring c = lift(*sub, g.n, w->deletion_vertex);
      try {
        c = apply_extension(g, c, *w);
      } catch (const ScriptStuckError& e) {
        out->reason = std::string("script_stuck: ") + e.what();
        return std::nullopt;
      }
      ++out->scripts;
      return c;
    }
    SquareSolver s(g, deadline);
    std::vector<int> col = s.greedy();
    if (*std::max_element(col.begin(), col.end()) > palette) {
      int r = s.feasible(palette, col);
      if (r == 0) {
        out->reason = "fallback_infeasible";
        return std::nullopt;
      }
      if (r == -1) {
        out->reason = "budget";
        return std::nullopt;
      }
    }
    ++out->fallbacks;
    Coloring c;
    c.palette = palette;
    c.color = col;
    return c;
  }

  static Coloring lift(const Coloring& sub, int n, int deleted) {
    Coloring c;
    c.palette = sub.palette;
    c.color.assign(n, 0);
    for (int x = 0; x < n; ++x)
      if (x != deleted) c.color[x] = sub.color[x - (x > deleted ? 1 : 0)];
    return c;
  }
};

}  // namespace

ConstructiveResult constructive_color(const PlanarGraph& g, bool override_hypothesis,
                                      Deadline deadline) {
  ConstructiveResult res;
  auto gi = girth(g);
  bool hypothesis = (!gi || *gi >= 6) && max_degree(g) >= 6;
  if (!hypothesis && !override_hypothesis)
    throw HypothesisError("needs girth >= 6 and max degree >= 6");
  ConstructiveCtx ctx{max_degree(g) + 4, max_degree(g), deadline, &res};
  auto c = ctx.solve(g);
  if (!c) return res;
  validate_coloring(g, *c, true);
  res.ok = true;
  res.coloring = *c;
  return res;
}

}  // namespace twodist
