#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3cert/errors.hpp"

namespace k3cert::cli {

enum class Format { Json, Text };

/// Steps in execution order; "all" expands to this list.
inline const std::vector<std::string>& known_steps() {
  static const std::vector<std::string> steps{"dims",       "pi-factorization", "fibration", "classify", "mult-iso",
                                              "invariance", "separation",       "iota",      "lattice"};
  return steps;
}

struct RunConfig {
  std::vector<std::string> steps{"all"};
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::int64_t bound = 100;
  Format format = Format::Json;
  std::optional<std::string> out;
  bool dump = false;    // matrices and subspaces to the dump stream
  bool timing = false;  // fill elapsed_ms; off by default so reports are reproducible
};

inline std::vector<std::string> expand_steps(const std::vector<std::string>& steps) {
  std::vector<std::string> out;
  for (const auto& s : steps) {
    if (s == "all") {
      out.insert(out.end(), known_steps().begin(), known_steps().end());
      continue;
    }
    bool known = false;
    for (const auto& k : known_steps()) known = known || k == s;
    if (!known) throw UsageError("unknown step '" + s + "'");
    out.push_back(s);
  }
  return out;
}

inline void validate(const RunConfig& c) {
  if (c.trials < 1) throw UsageError("--trials must be at least 1");
  if (c.bound < 1) throw UsageError("--bound must be at least 1");
  if (c.steps.empty()) throw UsageError("no step given");
  expand_steps(c.steps);
}

}  // namespace k3cert::cli
