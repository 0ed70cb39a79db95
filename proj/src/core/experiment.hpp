#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reports.hpp"
#include "walk.hpp"

namespace cw {

inline constexpr const char* kToolVersion = "0.1.0";

struct ExperimentConfig {
  WalkConfig walk;
  std::vector<std::string> reports;  // any of: drift, clt, proportion, hitting
  std::string csv_path;              // "" keeps the CSV in memory only
  std::string manifest_path;

  void validate() const;
};

struct SimulationResult {
  std::string csv;
  std::string manifest_json;
  std::optional<DriftReport> drift;
  std::optional<CltReport> clt;
  std::optional<ProportionSeries> proportion;
  std::optional<HittingReport> hitting;
};

// Frozen CSV layout: one row per (trial, checkpoint) with columns
// trial_id,n,displacement,a,b,flag_id,certified; inapplicable fields stay
// empty. Byte-identical across reruns and worker counts.
std::string traces_to_csv(const std::vector<WalkTrace>& traces);

SimulationResult simulate(const ExperimentConfig& cfg);

// Deterministic double formatting used by every CSV/JSON writer (%.17g).
std::string format_double(double v);

}  // namespace cw
