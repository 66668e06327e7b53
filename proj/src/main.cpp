#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "twodist/coloring.hpp"
#include "twodist/discharging.hpp"
#include "twodist/errors.hpp"
#include "twodist/formats.hpp"
#include "twodist/generators.hpp"
#include "twodist/graph.hpp"
#include "twodist/rational.hpp"
#include "twodist/records.hpp"
#include "twodist/rng.hpp"
#include "twodist/structure.hpp"

namespace {

using namespace twodist;
using Clock = std::chrono::steady_clock;

struct Opts {
  unsigned long long seed = 12345;
  long long budget_ms = 60000;
  std::string out;
  std::string case_sel = "auto";
  bool override_hypothesis = false;

  std::string input;
  std::string format = "auto";
  std::string rotations;
  std::string coloring_file;
  std::string corpus_file;
  std::string planar_code_out;
  int target = 560;
  bool discharge_pass = false;
};

// Records go to --out when given, else to stdout; prose goes to the other one.
void emit(const Opts& o, const std::string& line) {
  if (o.out.empty())
    std::cout << line << '\n';
  else
    append_jsonl(o.out, line);
}

std::ostream& human(const Opts& o) { return o.out.empty() ? std::cerr : std::cout; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

long long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

Deadline deadline_after(long long ms) { return Clock::now() + std::chrono::milliseconds(ms); }

PlanarGraph fabricate(const AbstractGraph& a) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < a.n; ++v)
    for (int u : a.adj[v])
      if (v < u) edges.emplace_back(v, u);
  return from_adjacency(a.n, edges);
}

struct LoadedGraph {
  PlanarGraph g;
  std::string id;
  std::string embedding;  // planar_code | sidecar | rotations | fabricated
};

bool looks_binary(const std::string& bytes) {
  for (unsigned char c : bytes) {
    if (c == '\n' || c == '\r') continue;
    if (c < 63 || c > 126) return true;
  }
  return false;
}

std::vector<LoadedGraph> load_graphs(const Opts& o) {
  std::string bytes = slurp(o.input);
  std::string fmt = o.format;
  if (fmt == "auto") {
    if (bytes.rfind(">>planar_code<<", 0) == 0 || looks_binary(bytes))
      fmt = "planar-code";
    else if (o.input.size() > 4 && o.input.substr(o.input.size() - 4) == ".rot")
      fmt = "rotations";
    else
      fmt = "g6";
  }
  std::vector<LoadedGraph> out;
  if (fmt == "planar-code") {
    auto gs = parse_planar_code(bytes);
    for (std::size_t i = 0; i < gs.size(); ++i)
      out.push_back({std::move(gs[i]), o.input + "#" + std::to_string(i), "planar_code"});
    return out;
  }
  if (fmt == "rotations") {
    out.push_back({from_rotations(parse_rotation_lines(bytes)), o.input + "#0", "rotations"});
    return out;
  }
  if (fmt != "g6") throw ParseError("unknown --format: " + fmt);
  std::vector<std::string> lines;
  std::istringstream ss(bytes);
  for (std::string line; std::getline(ss, line);)
    if (!line.empty() && line != "\r") lines.push_back(line);
  if (!o.rotations.empty() && lines.size() != 1)
    throw ParseError("--rotations expects exactly one graph6 line");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    AbstractGraph a = parse_graph6(lines[i]);
    if (!o.rotations.empty()) {
      auto rot = parse_rotation_lines(slurp(o.rotations));
      out.push_back({graph_with_rotations(a, rot), o.input + "#" + std::to_string(i), "sidecar"});
    } else {
      out.push_back({fabricate(a), o.input + "#" + std::to_string(i), "fabricated"});
    }
  }
  return out;
}

ResultRecord base_record(const LoadedGraph& lg, const std::string& mode) {
  ResultRecord r;
  r.id = lg.id;
  r.mode = mode;
  r.n = lg.g.n;
  r.m = lg.g.edge_count();
  r.delta = max_degree(lg.g);
  r.girth = girth(lg.g);
  return r;
}

bool hypothesis_holds(const PlanarGraph& g) {
  auto gi = girth(g);
  return max_degree(g) >= 6 && (!gi || *gi >= 6);
}

CaseId pick_case(const Opts& o, const PlanarGraph& g) {
  if (o.case_sel == "d7") return CaseId::case_d7;
  if (o.case_sel == "d6") return CaseId::case_d6;
  return max_degree(g) >= 7 ? CaseId::case_d7 : CaseId::case_d6;
}

std::vector<std::string> negative_summary(const DischargeReport& rep) {
  std::vector<std::string> out;
  for (const auto& ne : rep.negatives) {
    std::ostringstream ss;
    if (ne.kind == ElemKind::vertex)
      ss << "v " << ne.id << " d=" << ne.degree_or_length;
    else
      ss << "f " << ne.id << " len=" << ne.degree_or_length;
    ss << " charge=" << to_string(ne.final_charge);
    out.push_back(ss.str());
  }
  return out;
}

int run_parse(const Opts& o) {
  auto graphs = load_graphs(o);
  for (const auto& lg : graphs) {
    auto t0 = Clock::now();
    ResultRecord r = base_record(lg, "parse");
    r.ms = elapsed_ms(t0);
    emit(o, to_json_line(r));
  }
  human(o) << "parsed " << graphs.size() << " graph(s)\n";
  return 0;
}

int run_gen(const Opts& o) {
  auto corpus = generate_corpus(o.seed, o.target);
  int eligible = 0;
  std::vector<PlanarGraph> dump;
  char buf[16];
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& cg = corpus[i];
    std::snprintf(buf, sizeof buf, "corpus-%04zu", i);
    CorpusRecord r;
    r.id = buf;
    r.source = cg.source;
    r.hash = wl_hash(cg.g);
    r.n = cg.g.n;
    r.m = cg.g.edge_count();
    r.delta = max_degree(cg.g);
    r.girth = girth(cg.g);
    r.embedding = "generated";
    if (hypothesis_holds(cg.g) && cg.g.n <= 26) ++eligible;
    emit(o, to_json_line(r));
    if (!o.planar_code_out.empty()) dump.push_back(cg.g);
  }
  if (!o.planar_code_out.empty()) {
    std::ofstream pc(o.planar_code_out, std::ios::binary);
    if (!pc) throw std::runtime_error("cannot open: " + o.planar_code_out);
    pc << write_planar_code(dump);
  }
  human(o) << "generated " << corpus.size() << " graphs, " << eligible
           << " meet delta>=6, girth>=6, n<=26\n";
  return 0;
}

int run_color(const Opts& o) {
  auto graphs = load_graphs(o);
  int worst = 0;
  for (const auto& lg : graphs) {
    auto t0 = Clock::now();
    ResultRecord r = base_record(lg, "color");
    auto cr = constructive_color(lg.g, o.override_hypothesis, deadline_after(o.budget_ms));
    if (cr.ok) {
      validate_coloring(lg.g, cr.coloring, true);
      r.palette = cr.coloring.palette;
      r.fallbacks = cr.fallbacks;
      r.bound_ok = cr.coloring.palette <= r.delta + 4;
      r.coloring = write_coloring_lines(cr.coloring.color);
      r.graph = write_rotation_lines(lg.g);
    } else if (cr.reason == "budget") {
      r.status = "bounded-only";
      r.reason = cr.reason;
    } else {
      r.status = "anomaly";
      r.reason = cr.reason;
      r.graph = write_rotation_lines(lg.g);
      worst = 2;
    }
    r.ms = elapsed_ms(t0);
    emit(o, to_json_line(r));
  }
  return worst;
}

int run_chi2(const Opts& o) {
  auto graphs = load_graphs(o);
  int worst = 0;
  for (const auto& lg : graphs) {
    auto t0 = Clock::now();
    ResultRecord r = base_record(lg, "chi2");
    auto res = exact_chi2(lg.g, std::nullopt, deadline_after(o.budget_ms));
    bool eligible = hypothesis_holds(lg.g);
    if (res.exact) {
      r.chi2 = res.chi2;
      r.bound_ok = res.chi2 <= r.delta + 4;
    } else if (eligible || o.override_hypothesis) {
      auto cr = constructive_color(lg.g, o.override_hypothesis, deadline_after(o.budget_ms));
      r.status = "bounded-only";
      if (cr.ok) {
        validate_coloring(lg.g, cr.coloring, true);
        r.palette = cr.coloring.palette;
        r.fallbacks = cr.fallbacks;
        r.bound_ok = cr.coloring.palette <= r.delta + 4;
      } else {
        r.reason = cr.reason;
        r.bound_ok = false;
      }
    } else {
      r.status = "bounded-only";
      r.reason = "budget";
    }
    if (eligible && r.bound_ok.has_value() && !*r.bound_ok) {
      r.status = "anomaly";
      r.graph = write_rotation_lines(lg.g);
      worst = 2;
    }
    r.ms = elapsed_ms(t0);
    emit(o, to_json_line(r));
  }
  return worst;
}

int run_discharge(const Opts& o) {
  auto graphs = load_graphs(o);
  int worst = 0;
  for (const auto& lg : graphs) {
    auto t0 = Clock::now();
    ResultRecord r = base_record(lg, "discharge");
    CaseId c = pick_case(o, lg.g);
    auto led = init_charges(lg.g);
    apply_ruleset(lg.g, led, c, o.override_hypothesis);
    auto rep = final_report(lg.g, led);
    r.discharge_total = to_string(rep.total);
    r.negatives = negative_summary(rep);
    r.reason = std::string("case ") + case_name(c);
    if (rep.total != Rat(-12 * component_count(lg.g))) {
      r.status = "anomaly";
      r.graph = write_rotation_lines(lg.g);
      worst = 2;
    }
    r.ms = elapsed_ms(t0);
    emit(o, to_json_line(r));
  }
  return worst;
}

int run_sweep(const Opts& o) {
  std::vector<LoadedGraph> graphs;
  if (!o.corpus_file.empty()) {
    Opts in = o;
    in.input = o.corpus_file;
    graphs = load_graphs(in);
  } else {
    auto corpus = generate_corpus(o.seed, o.target);
    char buf[16];
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::snprintf(buf, sizeof buf, "corpus-%04zu", i);
      graphs.push_back({std::move(corpus[i].g), buf, "generated"});
    }
  }
  int processed = 0, skipped = 0, exact = 0, bounded = 0, anomalies = 0;
  int max_excess = -1000;
  long long fallback_total = 0;
  for (const auto& lg : graphs) {
    auto t0 = Clock::now();
    ResultRecord r = base_record(lg, "sweep");
    if (!hypothesis_holds(lg.g)) {
      r.status = "skipped";
      r.reason = "hypothesis";
      ++skipped;
      r.ms = elapsed_ms(t0);
      emit(o, to_json_line(r));
      continue;
    }
    ++processed;
    auto res = exact_chi2(lg.g, std::nullopt, deadline_after(o.budget_ms));
    if (res.exact) {
      ++exact;
      r.chi2 = res.chi2;
      r.bound_ok = res.chi2 <= r.delta + 4;
      max_excess = std::max(max_excess, res.chi2 - r.delta);
    } else {
      auto cr = constructive_color(lg.g, false, deadline_after(o.budget_ms));
      r.status = "bounded-only";
      ++bounded;
      if (cr.ok) {
        validate_coloring(lg.g, cr.coloring, true);
        r.palette = cr.coloring.palette;
        r.fallbacks = cr.fallbacks;
        fallback_total += cr.fallbacks;
        r.bound_ok = cr.coloring.palette <= r.delta + 4;
      } else {
        r.reason = cr.reason;
        r.bound_ok = false;
      }
    }
    if (o.discharge_pass && euler_ok(lg.g)) {
      auto led = init_charges(lg.g);
      apply_ruleset(lg.g, led, pick_case(o, lg.g), true);
      auto rep = final_report(lg.g, led);
      r.discharge_total = to_string(rep.total);
      r.negatives = negative_summary(rep);
    }
    if (!r.bound_ok.value_or(false)) {
      r.status = "anomaly";
      r.graph = write_rotation_lines(lg.g);
      ++anomalies;
    }
    r.ms = elapsed_ms(t0);
    emit(o, to_json_line(r));
  }
  human(o) << "sweep: " << processed << " processed, " << skipped << " skipped, " << exact
           << " exact, " << bounded << " bounded-only, " << anomalies << " anomalies";
  if (exact > 0) human(o) << ", max chi2-delta " << max_excess;
  human(o) << ", fallbacks " << fallback_total << "\n";
  return anomalies > 0 ? 2 : 0;
}

int run_verify(const Opts& o) {
  auto graphs = load_graphs(o);
  const auto& lg = graphs.front();
  auto t0 = Clock::now();
  ResultRecord r = base_record(lg, "verify");
  auto pairs = parse_coloring_lines(slurp(o.coloring_file));
  Coloring c;
  c.color.assign(lg.g.n, 0);
  for (auto [v, col] : pairs) {
    if (v >= lg.g.n) throw ParseError("coloring names unknown vertex " + std::to_string(v));
    c.color[v] = col;
    c.palette = std::max(c.palette, col);
  }
  r.coloring = write_coloring_lines(c.color);
  int bad_u = -1, bad_v = -1, bad_dist = 0;
  for (int v = 0; v < lg.g.n && bad_u < 0; ++v) {
    if (c.color[v] == 0) continue;
    for (int u : dist2_neighborhood(lg.g, v)) {
      if (u <= v || c.color[u] == 0 || c.color[u] != c.color[v]) continue;
      bad_u = v;
      bad_v = u;
      bad_dist = lg.g.adjacent(v, u) ? 1 : 2;
      break;
    }
  }
  if (bad_u >= 0) {
    r.status = "anomaly";
    std::ostringstream ss;
    ss << "conflict pair (" << bad_u << "," << bad_v << ") distance " << bad_dist;
    r.reason = ss.str();
  }
  r.ms = elapsed_ms(t0);
  emit(o, to_json_line(r));
  human(o) << (bad_u < 0 ? "valid" : "invalid: " + *r.reason) << "\n";
  return bad_u < 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-distance coloring workbench for planar graphs of girth >= 6"};
  app.require_subcommand(1);
  Opts o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--budget-ms", o.budget_ms, "per-graph budget for exact search")
      ->capture_default_str();
  app.add_option("--out", o.out, "append JSONL records to this file");
  app.add_option("--case", o.case_sel, "discharging rule set")
      ->check(CLI::IsMember({"auto", "d7", "d6"}))
      ->capture_default_str();
  app.add_flag("--override-hypothesis", o.override_hypothesis,
               "run outside delta/girth preconditions");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", o.input, "graph file")->required();
    cmd->add_option("--format", o.format, "auto|g6|planar-code|rotations")
        ->check(CLI::IsMember({"auto", "g6", "planar-code", "rotations"}));
    cmd->add_option("--rotations", o.rotations, "rotation sidecar for a graph6 input");
  };

  auto* cmd_parse = app.add_subcommand("parse", "decode inputs and report metrics");
  add_input(cmd_parse);
  auto* cmd_gen = app.add_subcommand("gen", "generate the verified corpus");
  cmd_gen->add_option("--target", o.target, "eligible-graph target")->capture_default_str();
  cmd_gen->add_option("--planar-code", o.planar_code_out, "also dump embeddings to this file");
  auto* cmd_color = app.add_subcommand("color", "constructive delta+4 coloring");
  add_input(cmd_color);
  auto* cmd_chi2 = app.add_subcommand("chi2", "exact chi2 within budget");
  add_input(cmd_chi2);
  auto* cmd_discharge = app.add_subcommand("discharge", "run a rule set and audit charges");
  add_input(cmd_discharge);
  auto* cmd_sweep = app.add_subcommand("sweep", "bound check over a corpus");
  cmd_sweep->add_option("--corpus", o.corpus_file, "sweep this file instead of generating");
  cmd_sweep->add_option("--target", o.target, "eligible-graph target when generating")
      ->capture_default_str();
  cmd_sweep->add_flag("--discharge", o.discharge_pass, "also run a discharge pass per graph");
  auto* cmd_verify = app.add_subcommand("verify", "check a coloring file against a graph");
  add_input(cmd_verify);
  cmd_verify->add_option("--coloring", o.coloring_file, "coloring file, \"vertex color\" lines")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_parse->parsed()) return run_parse(o);
    if (cmd_gen->parsed()) return run_gen(o);
    if (cmd_color->parsed()) return run_color(o);
    if (cmd_chi2->parsed()) return run_chi2(o);
    if (cmd_discharge->parsed()) return run_discharge(o);
    if (cmd_sweep->parsed()) return run_sweep(o);
    if (cmd_verify->parsed()) return run_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
