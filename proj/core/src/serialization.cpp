#include "samtk/serialization.hpp"

#include <stdexcept>

namespace samtk {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("serialization: " + what);
}

double number_at(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
  if (!j.at(key).is_number()) fail(std::string("key '") + key + "' is not a number");
  return j.at(key).get<double>();
}

}  // namespace

const char* to_string(DifferencingMode mode) {
  return mode == DifferencingMode::Eq3Literal ? "eq3_literal" : "standard_seasonal";
}

const char* to_string(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::Edf: return "edf";
    case SchedulerKind::Drr: return "drr";
    case SchedulerKind::EdfDrr: return "edf-drr";
  }
  fail("unknown scheduler kind");
}

DifferencingMode mode_from_string(const std::string& name) {
  if (name == "eq3_literal") return DifferencingMode::Eq3Literal;
  if (name == "standard_seasonal") return DifferencingMode::StandardSeasonal;
  fail("unknown differencing mode '" + name +
       "', expected 'eq3_literal' or 'standard_seasonal'");
}

SchedulerKind scheduler_from_string(const std::string& name) {
  if (name == "edf") return SchedulerKind::Edf;
  if (name == "drr") return SchedulerKind::Drr;
  if (name == "edf-drr" || name == "edf_drr") return SchedulerKind::EdfDrr;
  fail("unknown scheduler '" + name + "', expected 'edf', 'drr' or 'edf-drr'");
}

nlohmann::json to_json(const SamParams& params, DifferencingMode mode) {
  return {{"phi", params.ar},    {"theta", params.ma},
          {"Phi_s", params.sar}, {"Theta_s", params.sma},
          {"s", params.season},  {"sigma", params.sigma},
          {"mode", to_string(mode)}};
}

std::pair<SamParams, DifferencingMode> sam_params_from_json(
    const nlohmann::json& j) {
  SamParams params;
  params.ar = number_at(j, "phi");
  params.ma = number_at(j, "theta");
  params.sar = number_at(j, "Phi_s");
  params.sma = number_at(j, "Theta_s");
  params.season = static_cast<int>(number_at(j, "s"));
  params.sigma = number_at(j, "sigma");
  const DifferencingMode mode =
      j.contains("mode") ? mode_from_string(j.at("mode").get<std::string>())
                         : DifferencingMode::Eq3Literal;
  params.validate();
  return {params, mode};
}

nlohmann::json to_json(const FittedModel& model) {
  nlohmann::json j = to_json(model.params, model.mode);
  j["objective_value"] = model.objective_value;
  j["n_effective"] = model.n_effective;
  j["converged"] = model.converged;
  j["iterations"] = model.iterations;
  j["source"] = model.source;
  return j;
}

FittedModel fitted_model_from_json(const nlohmann::json& j) {
  FittedModel model;
  std::tie(model.params, model.mode) = sam_params_from_json(j);
  model.objective_value = j.value("objective_value", 0.0);
  model.n_effective = j.value("n_effective", std::size_t{0});
  model.converged = j.value("converged", false);
  model.iterations = j.value("iterations", 0);
  model.source = j.value("source", std::string{});
  return model;
}

nlohmann::json to_json(const ArModel& model) {
  return {{"order", model.order},
          {"coefficients", model.coefficients},
          {"intercept", model.intercept},
          {"sigma", model.sigma},
          {"stationary", model.stationary}};
}

nlohmann::json to_json(const DiagnosticReport& report) {
  return {{"residual_acf", report.residual_acf},
          {"ljung_box", report.ljung_box},
          {"ljung_box_lags", report.ljung_box_lags},
          {"ljung_box_df", report.ljung_box_df},
          {"residual_mean", report.residual_mean},
          {"residual_variance", report.residual_variance},
          {"n_residuals", report.n_residuals}};
}

nlohmann::json to_json(const Forecast& forecast) {
  return {{"origin", forecast.origin},
          {"horizon", forecast.horizon},
          {"point_values", forecast.point_values}};
}

nlohmann::json to_json(const PredictionReport& report) {
  auto metrics = [](const ErrorMetrics& m) {
    return nlohmann::json{{"mae", m.mae}, {"rmse", m.rmse}, {"mre", m.mre}};
  };
  return {{"sam", metrics(report.sam)},
          {"ar", metrics(report.ar)},
          {"sam_rmse_by_step", report.sam_rmse_by_step},
          {"ar_rmse_by_step", report.ar_rmse_by_step},
          {"improvement_ratio", report.improvement_ratio},
          {"horizon", report.horizon},
          {"ar_order", report.ar_order},
          {"origins", report.origins},
          {"fit_length", report.fit_length}};
}

nlohmann::json to_json(const SimReport& report, bool include_intervals) {
  nlohmann::json flows = nlohmann::json::array();
  for (const FlowReport& f : report.flows) {
    flows.push_back({{"id", f.id},
                     {"bytes_offered", f.bytes_offered},
                     {"bytes_served", f.bytes_served},
                     {"bytes_dropped", f.bytes_dropped},
                     {"frames_arrived", f.frames_arrived},
                     {"frames_completed", f.frames_completed},
                     {"frames_on_time", f.frames_on_time},
                     {"frames_missed", f.frames_missed},
                     {"frames_dropped", f.frames_dropped},
                     {"mean_delay", f.mean_delay}});
  }
  nlohmann::json j = {{"flows", flows},
                      {"total_served", report.total_served},
                      {"utilization", report.utilization},
                      {"fairness", report.fairness}};
  if (include_intervals) {
    nlohmann::json intervals = nlohmann::json::array();
    for (const IntervalStat& s : report.intervals)
      intervals.push_back(
          {{"queued_bytes", s.queued_bytes}, {"served_bytes", s.served_bytes}});
    j["intervals"] = intervals;
  }
  return j;
}

nlohmann::json to_json(const ComparisonReport& report) {
  return {{"acf_lags", report.acf_lags},
          {"acf_distance", report.acf_distance},
          {"ks", report.ks},
          {"mean_a", report.mean_a},
          {"mean_b", report.mean_b},
          {"mean_delta", report.mean_delta},
          {"mean_relative_delta", report.mean_relative_delta},
          {"std_a", report.std_a},
          {"std_b", report.std_b},
          {"std_delta", report.std_delta},
          {"std_relative_delta", report.std_relative_delta}};
}

namespace {

nlohmann::json to_json(const MomentStats& m) {
  return {{"count", m.count},       {"mean", m.mean},
          {"std", m.std_dev},       {"min", m.min},
          {"max", m.max},           {"skewness", m.skewness},
          {"kurtosis", m.kurtosis}};
}

}  // namespace

nlohmann::json to_json(const TraceStats& stats) {
  nlohmann::json per_kind = nlohmann::json::object();
  for (const auto& [kind, m] : stats.per_kind)
    per_kind[std::string(1, to_char(kind))] = to_json(m);
  return {{"overall", to_json(stats.overall)}, {"per_kind", per_kind}};
}

nlohmann::json to_json(const PcaResult& result) {
  return {{"directions", result.directions},
          {"explained_ratios", result.explained_ratios},
          {"scores", result.scores}};
}

nlohmann::json to_json(const ClusterResult& result) {
  return {{"centroids", result.centroids},
          {"assignment", result.assignment},
          {"wcss", result.wcss},
          {"iterations", result.iterations},
          {"wcss_history", result.wcss_history}};
}

}  // namespace samtk
