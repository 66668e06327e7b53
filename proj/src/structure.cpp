#include "twodist/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace twodist {

namespace {

// The other neighbour of a 2-vertex.
int other_end(const PlanarGraph& g, int two_vertex, int not_this) {
  for (int x : g.rot[two_vertex])
    if (x != not_this) return x;
  return -1;
}

bool all_distinct(const std::vector<int>& xs) {
  std::set<int> s(xs.begin(), xs.end());
  return s.size() == xs.size();
}

// The unique 2-neighbour of a 3(1)-vertex.
int two_neighbor_of(const PlanarGraph& g, int v) {
  for (int x : g.rot[v])
    if (g.degree(x) == 2) return x;
  return -1;
}

}  // namespace

bool is_31_vertex(const PlanarGraph& g, int v) {
  return g.degree(v) == 3 && count_neighbors_of_degree(g, v, 2) == 1;
}

bool is_poor(const PlanarGraph& g, int v) {
  return g.degree(v) == 2 || is_31_vertex(g, v);
}

bool is_senior(const PlanarGraph& g, int v) {
  if (g.degree(v) != 5) return false;
  int poor = 0;
  for (int u : g.rot[v])
    if (is_poor(g, u)) ++poor;
  return poor <= 4;
}

bool weak_adjacent(const PlanarGraph& g, int u, int w) {
  if (u == w) return false;
  for (int x : g.rot[u])
    if (g.degree(x) == 2 && x != w && g.adjacent(x, w)) return true;
  return false;
}

bool star_adjacent(const PlanarGraph& g, int u, int w) {
  if (u == w || g.degree(u) == 2 || g.degree(w) == 2) return false;
  for (int y : g.rot[u])
    if (is_31_vertex(g, y) && y != w && g.adjacent(y, w)) return true;
  return false;
}

SpecialType special_type(const PlanarGraph& g, int v) {
  int d = g.degree(v);
  if (d != 4 && d != 5) return SpecialType::none;
  std::vector<int> non2;
  for (int u : g.rot[v])
    if (g.degree(u) != 2) non2.push_back(u);
  int two = d - static_cast<int>(non2.size());
  if (d == 4 && two == 2) {
    bool has31 = false, has45 = false;
    for (int u : non2) {
      if (is_31_vertex(g, u)) has31 = true;
      if (g.degree(u) == 4 || g.degree(u) == 5) has45 = true;
    }
    if (has31 && has45) return SpecialType::type_i;
  }
  if (d == 4 && two == 3 && (g.degree(non2[0]) == 4 || g.degree(non2[0]) == 5))
    return SpecialType::type_ii;
  if (d == 5 && two == 4 && is_31_vertex(g, non2[0])) return SpecialType::type_iii;
  if (d == 5 && two == 5) return SpecialType::type_iv;
  return SpecialType::none;
}

Badness badness(const PlanarGraph& g, int v) {
  Badness b;
  int d = g.degree(v);
  if (d != 4 && d != 5) return b;

  std::vector<int> twos, others;
  for (int u : g.rot[v]) (g.degree(u) == 2 ? twos : others).push_back(u);
  std::vector<int> ends;
  for (int u : twos) ends.push_back(other_end(g, u, v));

  auto ends_distinct_min_deg = [&](int mindeg, bool exact) {
    for (int z : ends) {
      if (z == v) return false;
      if (exact ? g.degree(z) != mindeg : g.degree(z) < mindeg) return false;
    }
    return true;
  };

  if (d == 5 && twos.size() == 5 && ends_distinct_min_deg(5, false)) {
    std::vector<int> cast = {v};
    cast.insert(cast.end(), twos.begin(), twos.end());
    cast.insert(cast.end(), ends.begin(), ends.end());
    if (all_distinct(cast)) b.bad = true;
  }
  if (d == 5 && twos.size() == 4 && others.size() == 1 && is_31_vertex(g, others[0]) &&
      ends_distinct_min_deg(5, false)) {
    int y = others[0];
    int t = two_neighbor_of(g, y);
    int s = -1;
    for (int x : g.rot[y])
      if (x != t && x != v) s = x;
    if (s >= 0 && (g.degree(s) == 4 || g.degree(s) == 5)) {
      std::vector<int> cast = {v, y, t, s};
      cast.insert(cast.end(), twos.begin(), twos.end());
      cast.insert(cast.end(), ends.begin(), ends.end());
      if (all_distinct(cast)) b.semibad = true;
    }
  }
  if (d == 4 && twos.size() == 3 && others.size() == 1 && ends_distinct_min_deg(6, true)) {
    int p = others[0];
    if (g.degree(p) == 4 || g.degree(p) == 5) {
      std::vector<int> cast = {v, p};
      cast.insert(cast.end(), twos.begin(), twos.end());
      cast.insert(cast.end(), ends.begin(), ends.end());
      if (all_distinct(cast)) b.bad = true;
    }
  }
  if (d == 4 && twos.size() == 2 && others.size() == 2 && ends_distinct_min_deg(6, true)) {
    for (int pick = 0; pick < 2 && !b.semibad; ++pick) {
      int y = others[pick], p = others[1 - pick];
      if (!is_31_vertex(g, y)) continue;
      if (g.degree(p) != 4 && g.degree(p) != 5) continue;
      int t = two_neighbor_of(g, y);
      int s = -1;
      for (int x : g.rot[y])
        if (x != t && x != v) s = x;
      if (s < 0 || g.degree(s) != 5) continue;
      std::vector<int> cast = {v, y, t, s, p};
      cast.insert(cast.end(), twos.begin(), twos.end());
      cast.insert(cast.end(), ends.begin(), ends.end());
      if (all_distinct(cast)) b.semibad = true;
    }
  }
  return b;
}

VertexProfile classify_vertex(const PlanarGraph& g, int v) {
  VertexProfile p;
  p.degree = g.degree(v);
  p.two_neighbors = count_neighbors_of_degree(g, v, 2);
  p.poor_vertex = is_poor(g, v);
  p.senior = is_senior(g, v);
  p.special = special_type(g, v);
  p.badness = badness(g, v);
  return p;
}

const char* procedure_name(ProcedureId p) {
  switch (p) {
    case ProcedureId::adj2: return "adj2";
    case ProcedureId::two_next_to_three: return "two_next_to_three";
    case ProcedureId::deg3_lowd: return "deg3_lowd";
    case ProcedureId::deg3_31chain: return "deg3_31chain";
    case ProcedureId::deg4_lowd: return "deg4_lowd";
    case ProcedureId::deg4_31: return "deg4_31";
    case ProcedureId::deg4_three31: return "deg4_three31";
    case ProcedureId::special_d6_type12: return "special_d6_type12";
    case ProcedureId::special_d6_type34: return "special_d6_type34";
    case ProcedureId::special_d7: return "special_d7";
    case ProcedureId::type2_54: return "type2_54";
  }
  return "?";
}

std::vector<CrucialWindow> crucial_windows(const PlanarGraph& g, const Face& f, int delta) {
  std::vector<CrucialWindow> out;
  int L = f.length();
  if (L < 4) return out;
  auto vert = [&](int i) { return f.boundary[((i % L) + L) % L].from; };
  for (int i = 0; i < L; ++i) {
    std::array<int, 5> x;
    for (int k = 0; k < 5; ++k) x[k] = vert(i + k);
    std::set<int> dis(x.begin(), x.end());
    if (dis.size() != 5) continue;
    auto deg = [&](int k) { return g.degree(x[k]); };
    if (deg(0) == delta && deg(1) == 2 && deg(3) == 2 && deg(4) == delta &&
        (deg(2) == 4 || deg(2) == 5)) {
      out.push_back({x, deg(2) == 4 ? 0 : 1});
    } else if (deg(0) == delta && deg(1) == 2 && deg(2) == 4 && deg(3) == 5 && deg(4) >= 6) {
      out.push_back({x, 2});
    } else if (deg(4) == delta && deg(3) == 2 && deg(2) == 4 && deg(1) == 5 && deg(0) >= 6) {
      out.push_back({{x[4], x[3], x[2], x[1], x[0]}, 2});
    }
  }
  return out;
}

std::vector<int> f_crucial_vertices(const PlanarGraph& g, const Face& f, int delta) {
  std::set<int> centers;
  for (const auto& w : crucial_windows(g, f, delta)) centers.insert(w.center());
  return {centers.begin(), centers.end()};
}

namespace {

std::optional<ConfigurationWitness> find_adj2(const PlanarGraph& g) {
  for (int u = 0; u < g.n; ++u) {
    if (g.degree(u) != 2) continue;
    for (int v : g.rot[u]) {
      if (g.degree(v) != 2) continue;
      int w = other_end(g, u, v), z = other_end(g, v, u);
      if (!all_distinct({u, v, w, z})) continue;
      return ConfigurationWitness{ProcedureId::adj2, u, {u, v, w, z}};
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> find_deg3_lowd(const PlanarGraph& g, int delta) {
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 3 || big_d(g, v) > delta + 4) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 2) continue;
      int w = other_end(g, u, v);
      if (!all_distinct({u, v, w})) continue;
      return ConfigurationWitness{ProcedureId::deg3_lowd, u, {u, v, w}};
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> find_deg3_31chain(const PlanarGraph& g) {
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 3) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 2) continue;
      int w = other_end(g, u, v);
      for (int z : g.rot[v]) {
        if (g.degree(z) != 3) continue;
        for (int t : g.rot[z]) {
          if (g.degree(t) != 2 || t == u) continue;
          if (!all_distinct({u, v, z, t, w})) continue;
          return ConfigurationWitness{ProcedureId::deg3_31chain, u, {u, v, z, t, w}};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> find_deg4_lowd(const PlanarGraph& g, int delta) {
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 4 || big_d(g, v) > delta + 3) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 2) continue;
      int w = other_end(g, u, v);
      if (!all_distinct({u, v, w})) continue;
      return ConfigurationWitness{ProcedureId::deg4_lowd, u, {u, v, w}};
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> find_deg4_31(const PlanarGraph& g, int delta) {
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 4 || big_d(g, v) > delta + 4) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 2) continue;
      int w = other_end(g, u, v);
      for (int z : g.rot[v]) {
        if (!is_31_vertex(g, z)) continue;
        int t = two_neighbor_of(g, z);
        if (t == u) continue;
        if (!all_distinct({u, v, z, t, w})) continue;
        return ConfigurationWitness{ProcedureId::deg4_31, u, {u, v, z, t, w}};
      }
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> find_deg4_three31(const PlanarGraph& g) {
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) != 4) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 2) continue;
      int w = other_end(g, u, v);
      std::vector<int> cast = {u, v};
      bool ok = true;
      for (int z : g.rot[v]) {
        if (z == u) continue;
        if (!is_31_vertex(g, z)) {
          ok = false;
          break;
        }
        int t = two_neighbor_of(g, z);
        if (t == u) {
          ok = false;
          break;
        }
        cast.push_back(z);
        cast.push_back(t);
      }
      if (!ok) continue;
      cast.push_back(w);
      if (!all_distinct(cast)) continue;
      return ConfigurationWitness{ProcedureId::deg4_three31, u, cast};
    }
  }
  return std::nullopt;
}

// For a type I or III vertex, its 3(1)-neighbour and that one's 2-neighbour.
bool star_tail(const PlanarGraph& g, int v, int* y, int* t) {
  for (int x : g.rot[v])
    if (is_31_vertex(g, x)) {
      *y = x;
      *t = two_neighbor_of(g, x);
      return true;
    }
  return false;
}

std::optional<ConfigurationWitness> find_special_d6_type12(const PlanarGraph& g) {
  for (int v = 0; v < g.n; ++v) {
    SpecialType st = special_type(g, v);
    if (st != SpecialType::type_i && st != SpecialType::type_ii) continue;
    for (int u1 : g.rot[v]) {
      if (g.degree(u1) != 2) continue;
      int z = other_end(g, u1, v);
      if (g.degree(z) > 5) continue;
      for (int u2 : g.rot[v]) {
        if (u2 == u1 || g.degree(u2) != 2) continue;
        std::vector<int> cast = {u1, v, z, u2};
        if (st == SpecialType::type_i) {
          int y, t;
          if (!star_tail(g, v, &y, &t)) continue;
          cast.push_back(y);
          cast.push_back(t);
        }
        if (!all_distinct(cast)) continue;
        return ConfigurationWitness{ProcedureId::special_d6_type12, u1, cast, st};
      }
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> find_special_d6_type34(const PlanarGraph& g) {
  for (int v = 0; v < g.n; ++v) {
    SpecialType st = special_type(g, v);
    if (st != SpecialType::type_iii && st != SpecialType::type_iv) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 2) continue;
      int z = other_end(g, u, v);
      if (g.degree(z) > 4) continue;
      std::vector<int> cast = {u, v, z};
      if (st == SpecialType::type_iii) {
        int y, t;
        if (!star_tail(g, v, &y, &t)) continue;
        cast.push_back(y);
        cast.push_back(t);
      }
      if (!all_distinct(cast)) continue;
      return ConfigurationWitness{ProcedureId::special_d6_type34, u, cast, st};
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> find_special_d7(const PlanarGraph& g, int delta) {
  for (int v = 0; v < g.n; ++v) {
    SpecialType st = special_type(g, v);
    if (st == SpecialType::none) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 2) continue;
      int z = other_end(g, u, v);
      if (g.degree(z) > delta - 1) continue;
      std::vector<int> cast = {u, v, z};
      if (st == SpecialType::type_i || st == SpecialType::type_iii) {
        int y, t;
        if (!star_tail(g, v, &y, &t)) continue;
        cast.push_back(y);
        cast.push_back(t);
      }
      if (!all_distinct(cast)) continue;
      return ConfigurationWitness{ProcedureId::special_d7, u, cast, st};
    }
  }
  return std::nullopt;
}

std::optional<ConfigurationWitness> find_type2_54(const PlanarGraph& g) {
  for (int v = 0; v < g.n; ++v) {
    if (special_type(g, v) != SpecialType::type_ii) continue;
    for (int u : g.rot[v]) {
      if (g.degree(u) != 5 || count_neighbors_of_degree(g, u, 2) != 4) continue;
      for (int w : g.rot[u]) {
        if (g.degree(w) != 2 || w == v) continue;
        int z = other_end(g, w, u);
        if (g.degree(z) > 5) continue;
        if (!all_distinct({u, v, w, z})) continue;
        return ConfigurationWitness{ProcedureId::type2_54, u, {u, v, w, z},
                                    SpecialType::type_ii};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConfigurationWitness> find_reducible(const PlanarGraph& g, int root_delta) {
  if (auto w = find_adj2(g)) return w;
  if (auto w = find_deg3_lowd(g, root_delta)) return w;
  if (auto w = find_deg3_31chain(g)) return w;
  if (auto w = find_deg4_lowd(g, root_delta)) return w;
  if (auto w = find_deg4_31(g, root_delta)) return w;
  if (auto w = find_deg4_three31(g)) return w;
  if (root_delta == 6) {
    if (auto w = find_special_d6_type12(g)) return w;
    if (auto w = find_special_d6_type34(g)) return w;
  } else {
    if (auto w = find_special_d7(g, root_delta)) return w;
    if (auto w = find_type2_54(g)) return w;
  }
  return std::nullopt;
}

namespace {

void req(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError("witness: " + msg);
}

}  // namespace

void verify_witness(const PlanarGraph& g, const ConfigurationWitness& w, int root_delta) {
  const auto& c = w.cast;
  for (int x : c) req(x >= 0 && x < g.n, "cast vertex out of range");
  req(all_distinct(c), "cast not distinct");
  auto deg = [&](int x) { return g.degree(x); };
  auto adj = [&](int a, int b) { return g.adjacent(a, b); };
  switch (w.proc) {
    case ProcedureId::adj2: {
      req(c.size() == 4, "adj2 cast size");
      auto [u, v, ww, z] = std::tuple(c[0], c[1], c[2], c[3]);
      req(w.deletion_vertex == u, "deletion vertex");
      req(deg(u) == 2 && deg(v) == 2, "degrees");
      req(adj(u, v) && adj(u, ww) && adj(v, z), "adjacency");
      break;
    }
    case ProcedureId::two_next_to_three: {
      req(c.size() == 3, "two_next_to_three cast size");
      auto [v, ww, z] = std::tuple(c[0], c[1], c[2]);
      req(w.deletion_vertex == v, "deletion vertex");
      req(deg(v) == 2 && deg(ww) == 3, "degrees");
      req(adj(v, ww) && adj(v, z), "adjacency");
      break;
    }
    case ProcedureId::deg3_lowd: {
      req(c.size() == 3, "deg3_lowd cast size");
      auto [u, v, ww] = std::tuple(c[0], c[1], c[2]);
      req(w.deletion_vertex == u, "deletion vertex");
      req(deg(u) == 2 && deg(v) == 3, "degrees");
      req(adj(u, v) && adj(u, ww), "adjacency");
      req(big_d(g, v) <= root_delta + 4, "degree sum cap");
      break;
    }
    case ProcedureId::deg3_31chain: {
      req(c.size() == 5, "deg3_31chain cast size");
      auto [u, v, z, t, ww] = std::tuple(c[0], c[1], c[2], c[3], c[4]);
      req(w.deletion_vertex == u, "deletion vertex");
      req(deg(u) == 2 && deg(v) == 3 && deg(z) == 3 && deg(t) == 2, "degrees");
      req(adj(u, v) && adj(v, z) && adj(z, t) && adj(u, ww), "adjacency");
      break;
    }
    case ProcedureId::deg4_lowd: {
      req(c.size() == 3, "deg4_lowd cast size");
      auto [u, v, ww] = std::tuple(c[0], c[1], c[2]);
      req(w.deletion_vertex == u, "deletion vertex");
      req(deg(u) == 2 && deg(v) == 4, "degrees");
      req(adj(u, v) && adj(u, ww), "adjacency");
      req(big_d(g, v) <= root_delta + 3, "degree sum cap");
      break;
    }
    case ProcedureId::deg4_31: {
      req(c.size() == 5, "deg4_31 cast size");
      auto [u, v, z, t, ww] = std::tuple(c[0], c[1], c[2], c[3], c[4]);
      req(w.deletion_vertex == u, "deletion vertex");
      req(deg(u) == 2 && deg(v) == 4 && deg(t) == 2, "degrees");
      req(is_31_vertex(g, z), "z not a 3(1)-vertex");
      req(adj(u, v) && adj(v, z) && adj(z, t) && adj(u, ww), "adjacency");
      req(big_d(g, v) <= root_delta + 4, "degree sum cap");
      break;
    }
    case ProcedureId::deg4_three31: {
      req(c.size() == 9, "deg4_three31 cast size");
      int u = c[0], v = c[1], ww = c[8];
      req(w.deletion_vertex == u, "deletion vertex");
      req(deg(u) == 2 && deg(v) == 4, "degrees");
      req(adj(u, v) && adj(u, ww), "adjacency");
      for (int i = 0; i < 3; ++i) {
        int z = c[2 + 2 * i], t = c[3 + 2 * i];
        req(is_31_vertex(g, z), "z not a 3(1)-vertex");
        req(deg(t) == 2, "degrees");
        req(adj(v, z) && adj(z, t), "adjacency");
      }
      break;
    }
    case ProcedureId::special_d6_type12: {
      req(root_delta == 6, "case mismatch");
      req(w.vtype == SpecialType::type_i || w.vtype == SpecialType::type_ii, "type");
      req(c.size() == (w.vtype == SpecialType::type_i ? 6u : 4u), "cast size");
      int u1 = c[0], v = c[1], z = c[2], u2 = c[3];
      req(w.deletion_vertex == u1, "deletion vertex");
      req(special_type(g, v) == w.vtype, "special type");
      req(deg(u1) == 2 && deg(u2) == 2 && deg(z) <= 5, "degrees");
      req(adj(u1, v) && adj(u1, z) && adj(u2, v), "adjacency");
      if (w.vtype == SpecialType::type_i) {
        int y = c[4], t = c[5];
        req(is_31_vertex(g, y) && deg(t) == 2, "degrees");
        req(adj(v, y) && adj(y, t), "adjacency");
      }
      break;
    }
    case ProcedureId::special_d6_type34: {
      req(root_delta == 6, "case mismatch");
      req(w.vtype == SpecialType::type_iii || w.vtype == SpecialType::type_iv, "type");
      req(c.size() == (w.vtype == SpecialType::type_iii ? 5u : 3u), "cast size");
      int u = c[0], v = c[1], z = c[2];
      req(w.deletion_vertex == u, "deletion vertex");
      req(special_type(g, v) == w.vtype, "special type");
      req(deg(u) == 2 && deg(z) <= 4, "degrees");
      req(adj(u, v) && adj(u, z), "adjacency");
      if (w.vtype == SpecialType::type_iii) {
        int y = c[3], t = c[4];
        req(is_31_vertex(g, y) && deg(t) == 2, "degrees");
        req(adj(v, y) && adj(y, t), "adjacency");
      }
      break;
    }
    case ProcedureId::special_d7: {
      req(root_delta >= 7, "case mismatch");
      req(w.vtype != SpecialType::none, "type");
      bool tail = w.vtype == SpecialType::type_i || w.vtype == SpecialType::type_iii;
      req(c.size() == (tail ? 5u : 3u), "cast size");
      int u = c[0], v = c[1], z = c[2];
      req(w.deletion_vertex == u, "deletion vertex");
      req(special_type(g, v) == w.vtype, "special type");
      req(deg(u) == 2 && deg(z) <= root_delta - 1, "degrees");
      req(adj(u, v) && adj(u, z), "adjacency");
      if (tail) {
        int y = c[3], t = c[4];
        req(is_31_vertex(g, y) && deg(t) == 2, "degrees");
        req(adj(v, y) && adj(y, t), "adjacency");
      }
      break;
    }
    case ProcedureId::type2_54: {
      req(root_delta >= 7, "case mismatch");
      req(c.size() == 4, "type2_54 cast size");
      int u = c[0], v = c[1], ww = c[2], z = c[3];
      req(w.deletion_vertex == u, "deletion vertex");
      req(special_type(g, v) == SpecialType::type_ii, "special type");
      req(deg(u) == 5 && count_neighbors_of_degree(g, u, 2) == 4, "u not 5(4)");
      req(deg(ww) == 2 && deg(z) <= 5, "degrees");
      req(adj(u, v) && adj(u, ww) && adj(ww, z), "adjacency");
      break;
    }
  }
}

}  // namespace twodist
