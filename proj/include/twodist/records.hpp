#pragma once

#include <optional>
#include <string>
#include <vector>

namespace twodist {

struct CorpusRecord {
  std::string id;
  std::string source;
  std::string hash;
  int n = 0;
  int m = 0;
  int delta = 0;
  std::optional<int> girth;  // nullopt = forest, serialized as "inf"
  std::string embedding;     // generated | planar_code | sidecar | rotations | fabricated
};

struct ResultRecord {
  std::string id;
  std::string mode;  // parse | gen | color | chi2 | discharge | sweep | verify
  int n = 0;
  int m = 0;
  int delta = 0;
  std::optional<int> girth;
  std::optional<int> chi2;
  std::optional<bool> bound_ok;
  std::optional<int> palette;
  std::optional<int> fallbacks;
  std::optional<std::string> discharge_total;  // exact rational, e.g. "-12"
  std::optional<std::vector<std::string>> negatives;
  std::string status = "ok";  // ok | bounded-only | skipped | anomaly
  std::optional<std::string> reason;
  std::optional<std::string> graph;     // rotation lines, inlined on anomalies
  std::optional<std::string> coloring;  // coloring lines for color/verify runs
  long long ms = 0;
};

std::string to_json_line(const CorpusRecord& r);
std::string to_json_line(const ResultRecord& r);

void append_jsonl(const std::string& path, const std::string& line);

}  // namespace twodist
