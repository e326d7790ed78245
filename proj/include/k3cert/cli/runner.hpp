#pragma once

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "k3cert/cli/config.hpp"
#include "k3cert/cli/report.hpp"
#include "k3cert/cli/steps.hpp"

namespace k3cert::cli {

/// Runs the configured steps in order. Each step draws its randomness from
/// its own stream of the master seed, so reports do not depend on which other
/// steps run or in what order.
inline std::vector<Report> run(const RunConfig& config, std::ostream* dump = nullptr) {
  validate(config);
  std::vector<Report> reports;
  const StepContext ctx{config, config.dump ? dump : nullptr};
  for (const auto& name : expand_steps(config.steps)) {
    const auto start = std::chrono::steady_clock::now();
    Report r = step_table().at(name)(ctx);
    if (config.timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      r.elapsed_ms = ms.count();
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

inline int exit_code(const std::vector<Report>& reports) { return all_pass(reports) ? 0 : 1; }

inline std::string emit_string(const std::vector<Report>& reports, Format format) {
  std::ostringstream os;
  emit(os, reports, format);
  return os.str();
}

/// Writes to config.out when set, otherwise to `fallback`.
inline void emit_to(const RunConfig& config, const std::vector<Report>& reports, std::ostream& fallback) {
  if (!config.out) {
    emit(fallback, reports, config.format);
    return;
  }
  std::ofstream file(*config.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + *config.out + "'");
  emit(file, reports, config.format);
  file.flush();
  if (!file) throw IoError("failed writing output file '" + *config.out + "'");
}

}  // namespace k3cert::cli
