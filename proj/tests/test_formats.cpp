#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "twodist/errors.hpp"
#include "twodist/formats.hpp"
#include "twodist/generators.hpp"
#include "twodist/graph.hpp"
#include "twodist/rng.hpp"

using namespace twodist;

namespace {

// Path on 70 vertices in the 18-bit count form, checked against an
// independent encoder.
const char kPath70[] =
    "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@???"
    "?C????G????G????C????@?????G?????_????@?????@??????_?????G?????@?????"
    "?C??????G??????G??????C??????@???????G???????_??????@???????@????????"
    "_???????G???????@????????C????????G????????G????????C????????@???????"
    "??G?????????_????????@?????????@??????????_?????????G?????????@??????"
    "????C??????????G??????????G??????????C??????????@???????????G";

}  // namespace

TEST_CASE("graph6 reference strings") {
  CHECK(write_graph6(to_abstract(path_graph(4))) == "Ch");
  CHECK(write_graph6(to_abstract(cycle(6))) == "EhEG");
  CHECK(write_graph6(AbstractGraph{}) == "?");

  AbstractGraph k5;
  k5.n = 5;
  k5.adj.resize(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) k5.adj[i].push_back(j);
  CHECK(write_graph6(k5) == "D~{");

  CHECK(write_graph6(to_abstract(path_graph(70))) == kPath70);
  AbstractGraph p70 = parse_graph6(kPath70);
  REQUIRE(p70.n == 70);
  CHECK(p70.edge_count() == 69);
  CHECK(p70.adj[0] == std::vector<int>{1});
  CHECK(p70.adj[34] == std::vector<int>{33, 35});
  CHECK(p70.adj[69] == std::vector<int>{68});
}

TEST_CASE("graph6 parsing details") {
  SUBCASE("optional header") {
    AbstractGraph a = parse_graph6(">>graph6<<Ch");
    CHECK(a.n == 4);
    CHECK(a.adj[1] == std::vector<int>{0, 2});
  }
  SUBCASE("trailing newline is tolerated") {
    CHECK(parse_graph6("Ch\n").n == 4);
    CHECK(parse_graph6("Ch\r\n").n == 4);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);        // missing data byte
    CHECK_THROWS_AS(parse_graph6("Chh"), ParseError);      // extra data byte
    CHECK_THROWS_AS(parse_graph6("C "), ParseError);       // byte below 63
    CHECK_THROWS_AS(parse_graph6("BF"), ParseError);       // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~~????"), ParseError);   // 36-bit count form
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);      // truncated count
  }
}

TEST_CASE("graph6 round-trips on random graphs") {
  Rng rng(424242);
  for (int iter = 0; iter < 150; ++iter) {
    int n = rnd_int(rng, 1, 40);
    int max_extra = n * (n - 1) / 2 - (n - 1);
    PlanarGraph g = random_connected_graph(rng, n, rnd_int(rng, 0, std::min(max_extra, 30)));
    AbstractGraph a = to_abstract(g);
    std::string s = write_graph6(a);
    AbstractGraph b = parse_graph6(s);
    CHECK(b.n == a.n);
    CHECK(b.adj == a.adj);
    CHECK(write_graph6(b) == s);
  }
}

TEST_CASE("planar code carries the embedding") {
  SUBCASE("single graph with header") {
    PlanarGraph g = cycle(6);
    std::string s = write_planar_code({g});
    REQUIRE(s.rfind(">>planar_code<<", 0) == 0);
    auto back = parse_planar_code(s);
    REQUIRE(back.size() == 1);
    CHECK(back[0].n == 6);
    CHECK(back[0].rot == g.rot);
    CHECK(back[0].faces.size() == 2);
  }
  SUBCASE("concatenated stream without header") {
    std::string s = write_planar_code({cycle(6), k4()}, false);
    auto back = parse_planar_code(s);
    REQUIRE(back.size() == 2);
    CHECK(back[0].n == 6);
    CHECK(back[1].n == 4);
    CHECK(back[1].faces.size() == 4);
  }
  SUBCASE("byte-identical round-trips") {
    std::vector<PlanarGraph> gs = {cycle(6), k4(), wheel(6), prism(4),
                                   subdivide_all_edges(wheel(5))};
    std::string s = write_planar_code(gs);
    auto back = parse_planar_code(s);
    REQUIRE(back.size() == gs.size());
    CHECK(write_planar_code(back) == s);
    for (std::size_t i = 0; i < gs.size(); ++i) CHECK(back[i].rot == gs[i].rot);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_planar_code(std::string(1, '\0')), ParseError);
    std::string asym = {2, 2, 0, 0};  // vertex 2 does not list vertex 1 back
    CHECK_THROWS_AS(parse_planar_code(asym), ValidationError);
    std::string truncated = {3, 2};
    CHECK_THROWS_AS(parse_planar_code(truncated), ParseError);
    std::string out_of_range = {1, 2, 0};
    CHECK_THROWS_AS(parse_planar_code(out_of_range), ParseError);
  }
}

TEST_CASE("rotation sidecars") {
  PlanarGraph g = wheel(5);
  std::string text = write_rotation_lines(g);
  auto rot = parse_rotation_lines(text);
  CHECK(rot == g.rot);
  PlanarGraph back = graph_with_rotations(to_abstract(g), rot);
  CHECK(back.rot == g.rot);
  CHECK(back.faces.size() == g.faces.size());

  SUBCASE("line count must match the vertex count") {
    auto short_rot = rot;
    short_rot.pop_back();
    CHECK_THROWS_AS(graph_with_rotations(to_abstract(g), short_rot), ParseError);
  }
  SUBCASE("bad tokens are rejected") {
    CHECK_THROWS_AS(parse_rotation_lines("1 2\n0 x\n"), ParseError);
  }
  SUBCASE("rotations must describe the same graph") {
    auto twisted = rot;
    twisted[1][0] = 3;  // duplicates one neighbour, drops another
    CHECK_THROWS_AS(graph_with_rotations(to_abstract(g), twisted), ValidationError);
  }
}

TEST_CASE("coloring files") {
  SUBCASE("round-trip skips uncolored vertices") {
    std::string text = write_coloring_lines({1, 2, 0, 3});
    auto pairs = parse_coloring_lines(text);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[0] == std::pair<int, int>{0, 1});
    CHECK(pairs[1] == std::pair<int, int>{1, 2});
    CHECK(pairs[2] == std::pair<int, int>{3, 3});
  }
  SUBCASE("blank lines are allowed") {
    auto pairs = parse_coloring_lines("0 1\n\n2 5\n");
    CHECK(pairs.size() == 2);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_coloring_lines("0 0\n"), ParseError);   // color 0
    CHECK_THROWS_AS(parse_coloring_lines("-1 2\n"), ParseError);  // bad vertex
    CHECK_THROWS_AS(parse_coloring_lines("0 1\n0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring_lines("0\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring_lines("0 1 junk\n"), ParseError);
    CHECK_THROWS_AS(parse_coloring_lines("a 1\n"), ParseError);
  }
}
