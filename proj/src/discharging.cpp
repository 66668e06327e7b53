#include "twodist/discharging.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "twodist/errors.hpp"

namespace twodist {

const char* case_name(CaseId c) { return c == CaseId::case_d7 ? "d7" : "d6"; }

const char* rule_name(CaseId c, int phase) {
  static const char* d7[] = {"d7.R1", "d7.R2", "d7.R3", "d7.R4",
                             "d7.R5", "d7.R6", "d7.R7"};
  static const char* d6[] = {"d6.R1", "d6.R2", "d6.R3", "d6.R4",
                             "d6.R5", "d6.R6", "d6.R7"};
  if (phase < 1 || phase > 7)
    throw std::out_of_range("rule phase " + std::to_string(phase));
  return (c == CaseId::case_d7 ? d7 : d6)[phase - 1];
}

Rat ChargeLedger::total() const {
  Rat t(0);
  for (const Rat& r : vertex_charge) t += r;
  for (const Rat& r : face_charge) t += r;
  return t;
}

ChargeLedger init_charges(const PlanarGraph& g) {
  if (g.faces.empty() && g.edge_count() > 0)
    throw ValidationError("init_charges: faces not traced");
  ChargeLedger led;
  led.vertex_charge.reserve(g.n);
  for (int v = 0; v < g.n; ++v)
    led.vertex_charge.emplace_back(2 * g.degree(v) - 6);
  led.face_charge.reserve(g.faces.size());
  for (const Face& f : g.faces) led.face_charge.emplace_back(f.length() - 6);
  led.totals_by_phase.push_back(led.total());
  return led;
}

namespace {

std::map<std::pair<int, int>, int> dart_face_index(const PlanarGraph& g) {
  std::map<std::pair<int, int>, int> idx;
  for (size_t fi = 0; fi < g.faces.size(); ++fi)
    for (const Dart& d : g.faces[fi].boundary)
      idx[{d.from, d.to}] = static_cast<int>(fi);
  return idx;
}

}  // namespace

void apply_ruleset(const PlanarGraph& g, ChargeLedger& led, CaseId c,
                   bool override_hypothesis) {
  if (led.vertex_charge.size() != static_cast<size_t>(g.n) ||
      led.face_charge.size() != g.faces.size())
    throw ValidationError("apply_ruleset: ledger does not match graph");
  if (!led.transfers.empty() || led.totals_by_phase.size() > 1)
    throw ValidationError("apply_ruleset: ledger already discharged");
  if (!override_hypothesis) {
    int delta = max_degree(g);
    if (c == CaseId::case_d7 && delta < 7)
      throw HypothesisError("case d7 needs max degree >= 7, got " +
                            std::to_string(delta));
    if (c == CaseId::case_d6 && delta != 6)
      throw HypothesisError("case d6 needs max degree exactly 6, got " +
                            std::to_string(delta));
    auto gir = girth(g);
    if (gir && *gir < 6)
      throw HypothesisError("girth " + std::to_string(*gir) + " < 6");
    if (!euler_ok(g))
      throw HypothesisError("rotation system is not planar");
  }

  const bool d6 = (c == CaseId::case_d6);
  const int delta = max_degree(g);

  if (led.totals_by_phase.empty()) led.totals_by_phase.push_back(led.total());
  const Rat expected_total = led.totals_by_phase.front();

  const auto dart_face = dart_face_index(g);
  auto face_at = [&](int from, int to) { return dart_face.at({from, to}); };

  std::vector<VertexProfile> prof(g.n);
  for (int v = 0; v < g.n; ++v) prof[v] = classify_vertex(g, v);
  auto is31 = [&](int v) {
    return prof[v].degree == 3 && prof[v].two_neighbors == 1;
  };

  auto v2v = [](int from, int to, Rat amt) {
    return Transfer{0, ElemKind::vertex, ElemKind::vertex, from, to, amt};
  };
  auto v2f = [](int from, int fi, Rat amt) {
    return Transfer{0, ElemKind::vertex, ElemKind::face, from, fi, amt};
  };
  auto f2v = [](int fi, int to, Rat amt) {
    return Transfer{0, ElemKind::face, ElemKind::vertex, fi, to, amt};
  };

  auto commit = [&](int phase, std::vector<Transfer>&& ts) {
    for (Transfer& t : ts) {
      t.phase = phase;
      (t.from_kind == ElemKind::vertex ? led.vertex_charge[t.from]
                                       : led.face_charge[t.from]) -= t.amount;
      (t.to_kind == ElemKind::vertex ? led.vertex_charge[t.to]
                                     : led.face_charge[t.to]) += t.amount;
      led.transfers.push_back(t);
    }
    Rat tot = led.total();
    led.totals_by_phase.push_back(tot);
    if (tot != expected_total)
      throw std::logic_error(std::string("charge conservation broken after ") +
                             rule_name(c, phase));
  };

  // R1: each 2-vertex draws 1 from every neighbour.
  {
    std::vector<Transfer> ts;
    for (int v = 0; v < g.n; ++v) {
      if (g.degree(v) != 2) continue;
      for (int u : g.rot[v]) ts.push_back(v2v(u, v, Rat(1)));
    }
    commit(1, std::move(ts));
  }

  // R2: each 3(1)-vertex draws 1 from every 6+-neighbour; in the d6 case
  // senior 5-neighbours pay as well.
  {
    std::vector<Transfer> ts;
    for (int v = 0; v < g.n; ++v) {
      if (!is31(v)) continue;
      for (int u : g.rot[v])
        if (g.degree(u) >= 6 || (d6 && prof[u].senior))
          ts.push_back(v2v(u, v, Rat(1)));
    }
    commit(2, std::move(ts));
  }

  // R3: d7 case, each 3(1)-vertex draws 1/2 from every 5-neighbour. d6 case,
  // only a 3(1)-vertex with no R2 payer draws 1/2, from every 4+-neighbour.
  {
    std::vector<Transfer> ts;
    for (int v = 0; v < g.n; ++v) {
      if (!is31(v)) continue;
      if (d6) {
        bool covered = false;
        for (int u : g.rot[v])
          covered = covered || g.degree(u) >= 6 || prof[u].senior;
        if (covered) continue;
        for (int u : g.rot[v])
          if (g.degree(u) >= 4) ts.push_back(v2v(u, v, Rat(1, 2)));
      } else {
        for (int u : g.rot[v])
          if (g.degree(u) == 5) ts.push_back(v2v(u, v, Rat(1, 2)));
      }
    }
    commit(3, std::move(ts));
  }

  // R4: d7 case, each 4(3)-vertex draws 1/2 from every 5(k)-neighbour with
  // k <= 3. d6 case, each 5-vertex with at most three poor neighbours spreads
  // its positive charge over its face incidences.
  std::vector<bool> r4_face_source(g.n, false);
  {
    std::vector<Transfer> ts;
    if (d6) {
      for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 5) continue;
        int poor = 0;
        for (int u : g.rot[v]) poor += prof[u].poor_vertex ? 1 : 0;
        if (poor > 3) continue;
        Rat charge = led.vertex_charge[v];
        if (charge <= Rat(0)) continue;
        Rat share = charge / Rat(g.degree(v));
        for (int u : g.rot[v]) ts.push_back(v2f(v, face_at(v, u), share));
        r4_face_source[v] = true;
      }
    } else {
      for (int v = 0; v < g.n; ++v) {
        if (!(prof[v].degree == 4 && prof[v].two_neighbors == 3)) continue;
        for (int u : g.rot[v])
          if (g.degree(u) == 5 && prof[u].two_neighbors <= 3)
            ts.push_back(v2v(u, v, Rat(1, 2)));
      }
    }
    commit(4, std::move(ts));
  }

  // R5: each 6+-vertex pays 1 to qualifying small neighbours. 2-vertices and
  // 3(1)-vertices were already paid by the same source under R1/R2, so they
  // are skipped here; d7 covers the remaining 4--neighbours, d6 covers
  // 4(3)-neighbours and 4(2)-neighbours that touch a 3(1)-vertex.
  {
    std::vector<Transfer> ts;
    for (int u = 0; u < g.n; ++u) {
      if (g.degree(u) < 6) continue;
      for (int v : g.rot[u]) {
        if (g.degree(v) == 2 || is31(v)) continue;
        bool pays;
        if (d6) {
          bool near31 = false;
          if (prof[v].degree == 4 && prof[v].two_neighbors == 2)
            for (int w : g.rot[v]) near31 = near31 || is31(w);
          pays = (prof[v].degree == 4 && prof[v].two_neighbors == 3) || near31;
        } else {
          pays = g.degree(v) <= 4;
        }
        if (pays) ts.push_back(v2v(u, v, Rat(1)));
      }
    }
    commit(5, std::move(ts));
  }

  // R6: d7 case 7+-vertices, d6 case 6+-vertices, spread positive charge over
  // face incidences.
  {
    std::vector<Transfer> ts;
    const int min_deg = d6 ? 6 : 7;
    for (int v = 0; v < g.n; ++v) {
      if (g.degree(v) < min_deg) continue;
      Rat charge = led.vertex_charge[v];
      if (charge <= Rat(0)) continue;
      Rat share = charge / Rat(g.degree(v));
      for (int u : g.rot[v]) ts.push_back(v2f(v, face_at(v, u), share));
    }
    commit(6, std::move(ts));
  }

  // R7: each face spreads positive charge over its receiver occurrences,
  // counted with boundary multiplicity: crucial-window centers (d7) or
  // bad / semi-bad boundary vertices (d6). No receivers, charge stays.
  {
    std::vector<Transfer> ts;
    for (size_t fi = 0; fi < g.faces.size(); ++fi) {
      Rat charge = led.face_charge[fi];
      if (charge <= Rat(0)) continue;
      std::vector<int> targets;
      if (d6) {
        for (const Dart& d : g.faces[fi].boundary) {
          const Badness& b = prof[d.from].badness;
          if (b.bad || b.semibad) targets.push_back(d.from);
        }
      } else {
        for (const CrucialWindow& w : crucial_windows(g, g.faces[fi], delta))
          targets.push_back(w.center());
      }
      if (targets.empty()) continue;
      Rat share = charge / Rat(static_cast<long long>(targets.size()));
      for (int t : targets) {
        ts.push_back(f2v(static_cast<int>(fi), t, share));
        if (d6 && r4_face_source[t]) led.dual_role_flag = true;
      }
    }
    commit(7, std::move(ts));
  }
}

DischargeReport final_report(const PlanarGraph& g, const ChargeLedger& led) {
  DischargeReport rep;
  rep.total = led.total();
  const auto dart_face = dart_face_index(g);
  auto touching = [&](ElemKind k, int id) {
    std::vector<Transfer> out;
    for (const Transfer& t : led.transfers)
      if ((t.from_kind == k && t.from == id) || (t.to_kind == k && t.to == id))
        out.push_back(t);
    return out;
  };
  for (int v = 0; v < g.n; ++v) {
    if (led.vertex_charge[v] >= Rat(0)) continue;
    NegativeElement e;
    e.kind = ElemKind::vertex;
    e.id = v;
    e.final_charge = led.vertex_charge[v];
    VertexProfile p = classify_vertex(g, v);
    e.degree_or_length = p.degree;
    e.two_neighbors = p.two_neighbors;
    e.badness = p.badness;
    for (int u : g.rot[v])
      e.incident_face_lengths.push_back(
          g.faces[dart_face.at({v, u})].length());
    e.touching = touching(ElemKind::vertex, v);
    rep.negatives.push_back(std::move(e));
  }
  for (size_t fi = 0; fi < g.faces.size(); ++fi) {
    if (led.face_charge[fi] >= Rat(0)) continue;
    NegativeElement e;
    e.kind = ElemKind::face;
    e.id = static_cast<int>(fi);
    e.final_charge = led.face_charge[fi];
    e.degree_or_length = g.faces[fi].length();
    e.touching = touching(ElemKind::face, static_cast<int>(fi));
    rep.negatives.push_back(std::move(e));
  }
  return rep;
}

}  // namespace twodist
