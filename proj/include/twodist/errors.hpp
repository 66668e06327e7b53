#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twodist {

// Input violates a structural contract (bad rotation system, invalid
// coloring handed to a routine that requires a valid one, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph does not meet the preconditions a routine is specified for
// (max degree or girth too small, embedding not genuinely planar).
struct HypothesisError : std::runtime_error {
  explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// An extension script ran out of colors at some step. Carries the stuck
// vertex and the forbidden set for diagnosis.
struct ScriptStuckError : std::runtime_error {
  int stuck_vertex;
  std::vector<int> forbidden;
  ScriptStuckError(const std::string& msg, int v, std::vector<int> forb)
      : std::runtime_error(msg), stuck_vertex(v), forbidden(std::move(forb)) {}
};

// Malformed input file or encoded string.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds a hard resource cap (e.g. brute force on too many vertices).
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace twodist
