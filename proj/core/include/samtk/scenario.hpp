#pragma once

#include <string>
#include <vector>

#include "samtk/scheduler.hpp"

namespace samtk {

/// A parsed simulation scenario: resolved flows plus the run configuration.
struct Scenario {
  std::vector<Flow> flows;
  SimConfig config;
  /// capacity_fraction from the file, if that form was used (else 0).
  double capacity_fraction = 0.0;
};

/// Parse a scenario JSON document (see README for the schema). Flow traces
/// are either CSV files — paths resolved against `base_dir` — or synthetic
/// SAM traces generated deterministically from embedded seeds. A flow's
/// quantum defaults to its trace's mean frame size; capacity may be given in
/// bytes ("capacity") or as a fraction of the flows' aggregate mean demand
/// ("capacity_fraction"). Malformed documents raise std::runtime_error
/// naming the offending key.
Scenario load_scenario(const std::string& json_text, const std::string& base_dir = {});
Scenario load_scenario_file(const std::string& path);

}  // namespace samtk
