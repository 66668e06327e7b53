#include "twodist/records.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace twodist {

namespace {

using json = nlohmann::ordered_json;

json girth_field(const std::optional<int>& g) {
  if (g) return *g;
  return "inf";
}

}  // namespace

std::string to_json_line(const CorpusRecord& r) {
  json j;
  j["schema"] = "twodist-corpus-v1";
  j["id"] = r.id;
  j["source"] = r.source;
  j["hash"] = r.hash;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["girth"] = girth_field(r.girth);
  j["embedding"] = r.embedding;
  return j.dump();
}

std::string to_json_line(const ResultRecord& r) {
  json j;
  j["schema"] = "twodist-result-v1";
  j["id"] = r.id;
  j["mode"] = r.mode;
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["girth"] = girth_field(r.girth);
  if (r.chi2) j["chi2"] = *r.chi2;
  if (r.bound_ok.has_value()) j["bound_ok"] = *r.bound_ok;
  if (r.palette) j["palette"] = *r.palette;
  if (r.fallbacks) j["fallbacks"] = *r.fallbacks;
  if (r.discharge_total) j["discharge_total"] = *r.discharge_total;
  if (r.negatives) j["negatives"] = *r.negatives;
  j["status"] = r.status;
  if (r.reason) j["reason"] = *r.reason;
  if (r.graph) j["graph"] = *r.graph;
  if (r.coloring) j["coloring"] = *r.coloring;
  j["ms"] = r.ms;
  return j.dump();
}

void append_jsonl(const std::string& path, const std::string& line) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open for append: " + path);
  out << line << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace twodist
