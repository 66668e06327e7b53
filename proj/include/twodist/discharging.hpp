#pragma once

#include <vector>

#include "twodist/graph.hpp"
#include "twodist/rational.hpp"
#include "twodist/structure.hpp"

namespace twodist {

// The two rule systems. case_d7 expects max degree >= 7, case_d6 exactly 6.
enum class CaseId { case_d7, case_d6 };

const char* case_name(CaseId c);           // "d7" / "d6"
const char* rule_name(CaseId c, int phase); // "d7.R1" .. "d6.R7"

enum class ElemKind { vertex, face };

struct Transfer {
  int phase = 0;  // 1..7
  ElemKind from_kind = ElemKind::vertex;
  ElemKind to_kind = ElemKind::vertex;
  int from = -1;  // vertex id or face index
  int to = -1;
  Rat amount;
};

struct ChargeLedger {
  std::vector<Rat> vertex_charge;
  std::vector<Rat> face_charge;
  std::vector<Transfer> transfers;
  // totals_by_phase[0] is the initial total, [k] the total after phase k.
  std::vector<Rat> totals_by_phase;
  // Set when a vertex acted as a charge-to-faces source and later received
  // face charge in the same run. Not expected to occur; kept as a tripwire.
  bool dual_role_flag = false;

  Rat total() const;
};

// mu(v) = 2d(v) - 6, mu(f) = len(f) - 6. Requires faces to be traced.
ChargeLedger init_charges(const PlanarGraph& g);

// Runs phases R1..R7 of the chosen case. Within a phase every transfer is
// computed from the phase-entry state, then applied at once. Rules that move
// "positive charge" move max(charge, 0), split equally over eligible targets
// counted with boundary multiplicity; with no eligible target the charge
// stays put. Conservation of the total is checked after every phase.
// Unless override_hypothesis is set, requires: the case's degree condition,
// girth >= 6 or forest, and a planar rotation system (euler_ok).
void apply_ruleset(const PlanarGraph& g, ChargeLedger& led, CaseId c,
                   bool override_hypothesis = false);

struct NegativeElement {
  ElemKind kind = ElemKind::vertex;
  int id = -1;
  Rat final_charge;
  int degree_or_length = 0;           // d(v) for vertices, len(f) for faces
  int two_neighbors = 0;              // vertices only
  Badness badness;                    // vertices only
  std::vector<int> incident_face_lengths;  // vertices only, per dart
  std::vector<Transfer> touching;
};

struct DischargeReport {
  Rat total;
  std::vector<NegativeElement> negatives;  // vertices first, then faces, ascending id
};

DischargeReport final_report(const PlanarGraph& g, const ChargeLedger& led);

}  // namespace twodist
