#include <numeric>
#include <vector>

#include "doctest.h"
#include "twodist/discharging.hpp"
#include "twodist/errors.hpp"
#include "twodist/generators.hpp"
#include "twodist/graph.hpp"
#include "twodist/rational.hpp"

using namespace twodist;

namespace {

PlanarGraph spider(int k) { return subdivide_all_edges(star(k)); }

std::vector<Transfer> phase_transfers(const ChargeLedger& led, int phase) {
  std::vector<Transfer> out;
  for (const Transfer& t : led.transfers)
    if (t.phase == phase) out.push_back(t);
  return out;
}

ChargeLedger discharge(const PlanarGraph& g, CaseId c, bool override_hypothesis) {
  ChargeLedger led = init_charges(g);
  apply_ruleset(g, led, c, override_hypothesis);
  return led;
}

Rat vertex_sum(const ChargeLedger& led) {
  return std::accumulate(led.vertex_charge.begin(), led.vertex_charge.end(), Rat(0));
}

Rat face_sum(const ChargeLedger& led) {
  return std::accumulate(led.face_charge.begin(), led.face_charge.end(), Rat(0));
}

}  // namespace

TEST_CASE("initial charges") {
  struct Row {
    PlanarGraph g;
    Rat vertices, faces;
  };
  const Row rows[] = {
      {k4(), Rat(0), Rat(-12)},
      {subdivide_all_edges(k4()), Rat(-12), Rat(0)},
      {cycle(6), Rat(-12), Rat(0)},
      {subdivide_all_edges(cycle(6)), Rat(-24), Rat(12)},
  };
  for (const Row& r : rows) {
    ChargeLedger led = init_charges(r.g);
    CHECK(vertex_sum(led) == r.vertices);
    CHECK(face_sum(led) == r.faces);
    CHECK(led.total() == Rat(-12));
    REQUIRE(led.totals_by_phase.size() == 1);
    CHECK(led.totals_by_phase[0] == Rat(-12));
  }
}

TEST_CASE("a cycle only shuffles charge among its 2-vertices") {
  PlanarGraph g = cycle(6);
  for (CaseId c : {CaseId::case_d6, CaseId::case_d7}) {
    ChargeLedger led = discharge(g, c, true);
    for (int v = 0; v < g.n; ++v) CHECK(led.vertex_charge[v] == Rat(-2));
    for (const Rat& f : led.face_charge) CHECK(f == Rat(0));
    CHECK(led.total() == Rat(-12));
    CHECK(phase_transfers(led, 1).size() == 12);
  }
}

TEST_CASE("subdivided star with a degree-6 hub") {
  PlanarGraph g = spider(6);
  ChargeLedger led = discharge(g, CaseId::case_d6, false);
  CHECK(led.vertex_charge[0] == Rat(0));
  for (int v = 1; v <= 6; ++v) CHECK(led.vertex_charge[v] == Rat(-5));   // seed leaves
  for (int v = 7; v <= 12; ++v) CHECK(led.vertex_charge[v] == Rat(0));  // midpoints
  REQUIRE(led.face_charge.size() == 1);
  CHECK(led.face_charge[0] == Rat(18));
  CHECK(led.total() == Rat(-12));
  CHECK(phase_transfers(led, 1).size() == 12);
  for (int ph = 2; ph <= 7; ++ph) CHECK(phase_transfers(led, ph).empty());
  CHECK_FALSE(led.dual_role_flag);

  DischargeReport rep = final_report(g, led);
  CHECK(rep.total == Rat(-12));
  REQUIRE(rep.negatives.size() == 6);
  for (const NegativeElement& e : rep.negatives) {
    CHECK(e.kind == ElemKind::vertex);
    CHECK(e.final_charge == Rat(-5));
    CHECK(e.degree_or_length == 1);
    CHECK(e.incident_face_lengths == std::vector<int>{24});
    CHECK(e.touching.size() == 1);
  }
}

TEST_CASE("subdivided star with a degree-7 hub splits evenly over darts") {
  PlanarGraph g = spider(7);
  ChargeLedger led = discharge(g, CaseId::case_d7, false);
  CHECK(led.vertex_charge[0] == Rat(0));
  for (int v = 1; v <= 7; ++v) CHECK(led.vertex_charge[v] == Rat(-5));
  for (int v = 8; v <= 14; ++v) CHECK(led.vertex_charge[v] == Rat(0));
  REQUIRE(led.face_charge.size() == 1);
  CHECK(led.face_charge[0] == Rat(23));
  CHECK(led.total() == Rat(-12));

  auto r6 = phase_transfers(led, 6);
  REQUIRE(r6.size() == 7);
  for (const Transfer& t : r6) {
    CHECK(t.from_kind == ElemKind::vertex);
    CHECK(t.from == 0);
    CHECK(t.to_kind == ElemKind::face);
    CHECK(t.to == 0);
    CHECK(t.amount == Rat(1, 7));
  }
  CHECK(phase_transfers(led, 5).empty());
  CHECK(phase_transfers(led, 7).empty());
}

TEST_CASE("a senior 5-neighbour pays a 3(1)-vertex in full") {
  // 0 is a 3(1)-vertex; 3 is a senior 5-vertex; 8 is a 4-vertex; 12 is a
  // 6-vertex two steps away that keeps the graph at max degree 6.
  PlanarGraph g = from_adjacency(
      18, {{0, 1},  {1, 2},  {0, 3},   {3, 4},   {3, 5},   {3, 6},   {3, 7},
           {0, 8},  {8, 9},  {8, 10},  {8, 11},  {4, 12},  {12, 13}, {12, 14},
           {12, 15}, {12, 16}, {12, 17}});
  REQUIRE(max_degree(g) == 6);
  ChargeLedger led = discharge(g, CaseId::case_d6, false);

  auto r2 = phase_transfers(led, 2);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].from == 3);
  CHECK(r2[0].to == 0);
  CHECK(r2[0].amount == Rat(1));
  CHECK(phase_transfers(led, 3).empty());

  auto r4 = phase_transfers(led, 4);
  REQUIRE(r4.size() == 5);
  for (const Transfer& t : r4) {
    CHECK(t.from == 3);
    CHECK(t.to_kind == ElemKind::face);
    CHECK(t.amount == Rat(2, 5));
  }
  CHECK(led.vertex_charge[0] == Rat(0));
  CHECK(led.vertex_charge[3] == Rat(0));
  CHECK(led.total() == Rat(-12));
}

TEST_CASE("without a senior payer the 4-or-better neighbours chip in halves") {
  // 0 is a 3(1)-vertex whose non-2 neighbours are the 4-vertices 3 and 7.
  PlanarGraph g = from_adjacency(
      17, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {3, 5}, {3, 6}, {0, 7}, {7, 8},
           {7, 9}, {7, 10}, {2, 11}, {11, 12}, {11, 13}, {11, 14}, {11, 15},
           {11, 16}});
  REQUIRE(max_degree(g) == 6);
  ChargeLedger led = discharge(g, CaseId::case_d6, false);

  CHECK(phase_transfers(led, 2).empty());
  auto r3 = phase_transfers(led, 3);
  REQUIRE(r3.size() == 2);
  for (const Transfer& t : r3) {
    CHECK(t.to == 0);
    CHECK(t.amount == Rat(1, 2));
    CHECK((t.from == 3 || t.from == 7));
  }
  CHECK(led.total() == Rat(-12));
}

TEST_CASE("a carefree 5-vertex spreads its charge per dart") {
  PlanarGraph g = star(5);
  ChargeLedger led = discharge(g, CaseId::case_d6, true);
  auto r4 = phase_transfers(led, 4);
  REQUIRE(r4.size() == 5);
  for (const Transfer& t : r4) {
    CHECK(t.from == 0);
    CHECK(t.to_kind == ElemKind::face);
    CHECK(t.to == 0);
    CHECK(t.amount == Rat(4, 5));
  }
  CHECK(led.vertex_charge[0] == Rat(0));
  CHECK(led.face_charge[0] == Rat(8));
  CHECK(led.total() == Rat(-12));
  CHECK_FALSE(led.dual_role_flag);
}

TEST_CASE("4(3)-vertices draw from settled 5-neighbours under the larger case") {
  // 0 is a 4(3)-vertex; 7 is a 5(0)-vertex and must pay a half.
  PlanarGraph pays = from_adjacency(
      12, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}, {7, 8},
           {7, 9}, {7, 10}, {7, 11}});
  ChargeLedger led = discharge(pays, CaseId::case_d7, true);
  auto r4 = phase_transfers(led, 4);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].from == 7);
  CHECK(r4[0].to == 0);
  CHECK(r4[0].amount == Rat(1, 2));
  CHECK(led.total() == Rat(-12));

  // Same shape, but the 5-neighbour has four 2-neighbours of its own.
  PlanarGraph skips = from_adjacency(
      16, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {0, 7}, {7, 8},
           {8, 9}, {7, 10}, {10, 11}, {7, 12}, {12, 13}, {7, 14}, {14, 15}});
  ChargeLedger led2 = discharge(skips, CaseId::case_d7, true);
  CHECK(phase_transfers(led2, 4).empty());
  CHECK(led2.total() == Rat(-12));
}

TEST_CASE("faces route their surplus to bad vertices by boundary occurrence") {
  // 0 is a bad 4-vertex: three subdivided spokes to degree-6 ends, one
  // 4-neighbour. The whole tree lies on a single face.
  std::vector<std::pair<int, int>> e;
  int next = 1;
  for (int i = 0; i < 3; ++i) {
    int mid = next++, end = next++;
    e.push_back({0, mid});
    e.push_back({mid, end});
    for (int l = 0; l < 5; ++l) e.push_back({end, next++});
  }
  int p = next++;
  e.push_back({0, p});
  for (int l = 0; l < 3; ++l) e.push_back({p, next++});
  PlanarGraph g = from_adjacency(next, e);
  REQUIRE(max_degree(g) == 6);
  REQUIRE(badness(g, 0).bad);
  REQUIRE(g.faces.size() == 1);

  ChargeLedger led = discharge(g, CaseId::case_d6, false);
  auto r6 = phase_transfers(led, 6);
  CHECK(r6.size() == 18);  // three degree-6 ends, 6 darts each
  for (const Transfer& t : r6) CHECK(t.amount == Rat(5, 6));

  auto r7 = phase_transfers(led, 7);
  REQUIRE(r7.size() == 4);  // the bad vertex sits on the face boundary 4 times
  for (const Transfer& t : r7) {
    CHECK(t.from_kind == ElemKind::face);
    CHECK(t.from == 0);
    CHECK(t.to == 0);
    CHECK(t.amount == Rat(59, 4));
  }
  CHECK(led.vertex_charge[0] == Rat(58));
  CHECK(led.face_charge[0] == Rat(0));
  CHECK(led.total() == Rat(-12));
  CHECK_FALSE(led.dual_role_flag);
}

TEST_CASE("ledger misuse and hypothesis violations") {
  SUBCASE("a ledger cannot be discharged twice") {
    PlanarGraph g = cycle(6);
    ChargeLedger led = init_charges(g);
    apply_ruleset(g, led, CaseId::case_d6, true);
    CHECK_THROWS_AS(apply_ruleset(g, led, CaseId::case_d6, true), ValidationError);
  }
  SUBCASE("mismatched ledger") {
    ChargeLedger led = init_charges(cycle(6));
    CHECK_THROWS_AS(apply_ruleset(cycle(7), led, CaseId::case_d6, true),
                    ValidationError);
  }
  SUBCASE("degree hypothesis") {
    ChargeLedger led = init_charges(cycle(6));
    CHECK_THROWS_AS(apply_ruleset(cycle(6), led, CaseId::case_d6, false),
                    HypothesisError);
    ChargeLedger led2 = init_charges(spider(6));
    CHECK_THROWS_AS(apply_ruleset(spider(6), led2, CaseId::case_d7, false),
                    HypothesisError);
  }
  SUBCASE("girth hypothesis") {
    ChargeLedger led = init_charges(wheel(7));
    CHECK_THROWS_AS(apply_ruleset(wheel(7), led, CaseId::case_d7, false),
                    HypothesisError);
    ChargeLedger led2 = init_charges(wheel(7));
    CHECK_NOTHROW(apply_ruleset(wheel(7), led2, CaseId::case_d7, true));
    CHECK(led2.total() == Rat(-12));
  }
}

TEST_CASE("conservation across a corpus sample under both rule sets") {
  for (const GeneratedGraph& gg : generate_corpus(99, 30)) {
    for (CaseId c : {CaseId::case_d6, CaseId::case_d7}) {
      ChargeLedger led = discharge(gg.g, c, true);
      REQUIRE(led.totals_by_phase.size() == 8);
      for (const Rat& t : led.totals_by_phase) CHECK(t == Rat(-12));
      DischargeReport rep = final_report(gg.g, led);
      CHECK(rep.total == Rat(-12));
      for (const NegativeElement& e : rep.negatives) {
        CHECK(e.final_charge < Rat(0));
        CHECK(e.id >= 0);
      }
    }
  }
}
