#include "twodist/formats.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twodist/errors.hpp"

namespace twodist {

int AbstractGraph::edge_count() const {
  std::size_t d = 0;
  for (const auto& row : adj) d += row.size();
  return static_cast<int>(d / 2);
}

AbstractGraph to_abstract(const PlanarGraph& g) {
  AbstractGraph a;
  a.n = g.n;
  a.adj = g.rot;
  for (auto& row : a.adj) std::sort(row.begin(), row.end());
  return a;
}

namespace {

int g6_byte(const std::string& s, std::size_t pos) {
  unsigned char b = static_cast<unsigned char>(s[pos]);
  if (b < 63 || b > 126)
    throw ParseError("graph6: byte " + std::to_string(pos) + " value " +
                     std::to_string(b) + " outside [63,126]");
  return b - 63;
}

}  // namespace

AbstractGraph parse_graph6(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (s[0] != '~') {
    n = g6_byte(s, 0);
    pos = 1;
  } else {
    if (s.size() >= 2 && s[1] == '~')
      throw ParseError("graph6: 36-bit vertex counts not supported");
    if (s.size() < 4) throw ParseError("graph6: truncated vertex count");
    n = (static_cast<long long>(g6_byte(s, 1)) << 12) |
        (static_cast<long long>(g6_byte(s, 2)) << 6) | g6_byte(s, 3);
    pos = 4;
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) +
                     " data bytes for n=" + std::to_string(n) + ", got " +
                     std::to_string(s.size() - pos));

  AbstractGraph a;
  a.n = static_cast<int>(n);
  a.adj.resize(a.n);
  long long bi = 0;
  for (int j = 1; j < a.n; ++j)
    for (int i = 0; i < j; ++i, ++bi) {
      int byte = g6_byte(s, pos + static_cast<std::size_t>(bi / 6));
      if ((byte >> (5 - bi % 6)) & 1) {
        a.adj[i].push_back(j);
        a.adj[j].push_back(i);
      }
    }
  for (long long p = bits; p < static_cast<long long>(need) * 6; ++p) {
    int byte = g6_byte(s, pos + static_cast<std::size_t>(p / 6));
    if ((byte >> (5 - p % 6)) & 1)
      throw ParseError("graph6: nonzero padding bit");
  }
  return a;
}

std::string write_graph6(const AbstractGraph& a) {
  if (a.n < 0 || a.n > 258047)
    throw ParseError("graph6: vertex count " + std::to_string(a.n) +
                     " outside the 18-bit form");
  std::string out;
  if (a.n <= 62) {
    out.push_back(static_cast<char>(a.n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((a.n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((a.n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((a.n & 63) + 63));
  }
  std::vector<std::vector<bool>> m(a.n, std::vector<bool>(a.n, false));
  for (int v = 0; v < a.n; ++v)
    for (int u : a.adj[v]) m[v][u] = true;
  int acc = 0, k = 0;
  for (int j = 1; j < a.n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (m[i][j] ? 1 : 0);
      if (++k == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        k = 0;
      }
    }
  if (k > 0) out.push_back(static_cast<char>((acc << (6 - k)) + 63));
  return out;
}

std::vector<PlanarGraph> parse_planar_code(const std::string& bytes) {
  std::size_t pos = 0;
  const std::string header = ">>planar_code<<";
  if (bytes.rfind(header, 0) == 0) pos = header.size();
  std::vector<PlanarGraph> out;
  while (pos < bytes.size()) {
    int n = static_cast<unsigned char>(bytes[pos++]);
    if (n == 0) throw ParseError("planar_code: vertex count byte is 0");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      for (;;) {
        if (pos >= bytes.size())
          throw ParseError("planar_code: truncated in the list of vertex " +
                           std::to_string(v));
        int b = static_cast<unsigned char>(bytes[pos++]);
        if (b == 0) break;
        if (b > n)
          throw ParseError("planar_code: neighbour byte " + std::to_string(b) +
                           " exceeds vertex count " + std::to_string(n));
        rot[v].push_back(b - 1);
      }
    }
    out.push_back(from_rotations(rot));
  }
  return out;
}

std::string write_planar_code(const std::vector<PlanarGraph>& gs, bool header) {
  std::string out;
  if (header) out += ">>planar_code<<";
  for (const PlanarGraph& g : gs) {
    if (g.n < 1 || g.n > 255)
      throw ParseError("planar_code: vertex count " + std::to_string(g.n) +
                       " does not fit one byte");
    out.push_back(static_cast<char>(g.n));
    for (int v = 0; v < g.n; ++v) {
      for (int u : g.rot[v]) out.push_back(static_cast<char>(u + 1));
      out.push_back('\0');
    }
  }
  return out;
}

std::vector<std::vector<int>> parse_rotation_lines(const std::string& text) {
  std::vector<std::vector<int>> rot;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    long long x;
    while (ls >> x) row.push_back(static_cast<int>(x));
    if (!ls.eof())
      throw ParseError("rotation file: bad token in line " +
                       std::to_string(rot.size()));
    rot.push_back(std::move(row));
  }
  return rot;
}

std::string write_rotation_lines(const PlanarGraph& g) {
  std::string out;
  for (int v = 0; v < g.n; ++v) {
    for (std::size_t i = 0; i < g.rot[v].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(g.rot[v][i]);
    }
    out += '\n';
  }
  return out;
}

PlanarGraph graph_with_rotations(const AbstractGraph& a,
                                 const std::vector<std::vector<int>>& rot) {
  if (rot.size() != static_cast<std::size_t>(a.n))
    throw ParseError("rotation file: " + std::to_string(rot.size()) +
                     " lines for " + std::to_string(a.n) + " vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < a.n; ++v)
    for (int u : a.adj[v])
      if (v < u) edges.emplace_back(v, u);
  return build_graph(a.n, edges, rot);
}

std::vector<std::pair<int, int>> parse_coloring_lines(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::set<int> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long long v, c;
    if (!(ls >> v)) {
      if (ls.eof()) continue;  // blank line
      throw ParseError("coloring file line " + std::to_string(lineno) +
                       ": expected \"vertex color\"");
    }
    if (!(ls >> c))
      throw ParseError("coloring file line " + std::to_string(lineno) +
                       ": expected \"vertex color\"");
    std::string rest;
    if (ls >> rest)
      throw ParseError("coloring file line " + std::to_string(lineno) +
                       ": trailing token \"" + rest + "\"");
    if (v < 0)
      throw ParseError("coloring file line " + std::to_string(lineno) +
                       ": vertex ids are nonnegative");
    if (c < 1)
      throw ParseError("coloring file line " + std::to_string(lineno) +
                       ": colors are 1-based");
    if (!seen.insert(static_cast<int>(v)).second)
      throw ParseError("coloring file line " + std::to_string(lineno) +
                       ": duplicate vertex " + std::to_string(v));
    out.emplace_back(static_cast<int>(v), static_cast<int>(c));
  }
  return out;
}

std::string write_coloring_lines(const std::vector<int>& color) {
  std::string out;
  for (std::size_t v = 0; v < color.size(); ++v)
    if (color[v] != 0)
      out += std::to_string(v) + " " + std::to_string(color[v]) + "\n";
  return out;
}

}  // namespace twodist
