#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>

#include "samtk/estimation.hpp"
#include "samtk/prediction.hpp"
#include "samtk/sam.hpp"
#include "samtk/scheduler.hpp"
#include "samtk/stats.hpp"

namespace samtk {

// Enum <-> string names used in every JSON artifact.
const char* to_string(DifferencingMode mode);          // "eq3_literal" / "standard_seasonal"
const char* to_string(SchedulerKind kind);             // "edf" / "drr" / "edf-drr"
DifferencingMode mode_from_string(const std::string& name);
SchedulerKind scheduler_from_string(const std::string& name);

/// SamParams as {"phi", "theta", "Phi_s", "Theta_s", "s", "sigma", "mode"};
/// values survive a round trip to better than 1e-12.
nlohmann::json to_json(const SamParams& params, DifferencingMode mode);
std::pair<SamParams, DifferencingMode> sam_params_from_json(const nlohmann::json& j);

/// FittedModel is a flat superset of the SamParams object (adds
/// objective_value, n_effective, converged, iterations, source).
nlohmann::json to_json(const FittedModel& model);
FittedModel fitted_model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ArModel& model);
nlohmann::json to_json(const DiagnosticReport& report);
nlohmann::json to_json(const Forecast& forecast);
nlohmann::json to_json(const PredictionReport& report);
nlohmann::json to_json(const SimReport& report, bool include_intervals = false);
nlohmann::json to_json(const ComparisonReport& report);
nlohmann::json to_json(const TraceStats& stats);
nlohmann::json to_json(const PcaResult& result);
nlohmann::json to_json(const ClusterResult& result);

}  // namespace samtk
