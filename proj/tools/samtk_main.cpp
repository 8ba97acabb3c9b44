// samtk — fit, generate, forecast and schedule MPEG frame-size traces.
//
// Every subcommand reads local files only, takes all randomness from an
// explicit --seed, and writes artifacts as {"meta": {...}, <payload>}.
// Errors leave a machine-readable {"error": ...} object on stderr and a
// non-zero exit code.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "samtk/estimation.hpp"
#include "samtk/generation.hpp"
#include "samtk/prediction.hpp"
#include "samtk/rng.hpp"
#include "samtk/scenario.hpp"
#include "samtk/serialization.hpp"
#include "samtk/stats.hpp"
#include "samtk/trace.hpp"
#include "samtk/version.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_meta(const std::string& command, json config) {
  return {{"tool", "samtk"},
          {"version", samtk::kVersion},
          {"timestamp", utc_timestamp()},
          {"command", command},
          {"config", std::move(config)}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cli: cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("cli: short write on '" + path + "'");
}

void write_artifact(const std::string& path, const json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

samtk::TraceFormat format_from_string(const std::string& name) {
  if (name == "csv") return samtk::TraceFormat::Csv;
  if (name == "sizes") return samtk::TraceFormat::SizesOnly;
  throw std::runtime_error("cli: unknown trace format '" + name +
                           "', expected 'csv' or 'sizes'");
}

// Model inputs may be a bare params object, a fit artifact ({"model": ...})
// or a generate sidecar ({"params": ...}).
json load_model_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cli: cannot open model file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("cli: model file '" + path + "' is not JSON: " + e.what());
  }
  if (j.contains("model")) return j.at("model");
  if (j.contains("params")) return j.at("params");
  return j;
}

// --season accepts a number or "auto" (ACF-peak detection up to max_period).
int resolve_season(const samtk::FrameTrace& trace, const std::string& option,
                   int max_period) {
  if (option == "auto") return samtk::detect_seasonality(trace, max_period);
  try {
    std::size_t used = 0;
    const int s = std::stoi(option, &used);
    if (used != option.size() || s < 2) throw std::invalid_argument("range");
    return s;
  } catch (const std::exception&) {
    throw std::runtime_error("cli: --season must be an integer >= 2 or 'auto'");
  }
}

// ---- fit --------------------------------------------------------------

struct FitArgs {
  std::string trace_path, format = "csv", season = "auto", mode = "eq3_literal";
  std::string out_path;
  double fps = 30.0;
  int max_period = 32;
  int max_evals = 2000;
};

void run_fit(const FitArgs& args) {
  const samtk::FrameTrace trace =
      samtk::load_trace(args.trace_path, format_from_string(args.format), args.fps);
  const samtk::DifferencingMode mode = samtk::mode_from_string(args.mode);
  const int season = resolve_season(trace, args.season, args.max_period);

  samtk::FitOptions options;
  options.simplex.max_evaluations = args.max_evals;
  const samtk::FittedModel model = samtk::fit_sam(trace, season, mode, options);

  json out;
  out["meta"] = make_meta("fit", {{"trace", args.trace_path},
                                  {"format", args.format},
                                  {"frame_rate", args.fps},
                                  {"season", args.season},
                                  {"max_period", args.max_period},
                                  {"mode", args.mode},
                                  {"max_evaluations", args.max_evals}});
  out["model"] = samtk::to_json(model);
  out["seasonality"] = {{"used", season}};
  // Record the ACF-peak detection next to the declared period whenever the
  // trace is long enough to run it.
  try {
    out["seasonality"]["detected"] =
        samtk::detect_seasonality(trace, args.max_period);
  } catch (const std::exception& e) {
    out["seasonality"]["detected"] = nullptr;
    out["seasonality"]["note"] = e.what();
  }
  try {
    out["diagnostics"] = samtk::to_json(samtk::diagnostics(model, trace));
  } catch (const std::exception& e) {
    out["diagnostics"] = nullptr;
    out["diagnostics_note"] = e.what();
  }
  write_artifact(args.out_path, out);

  std::printf("fitted %s on %zu frames (s=%d)\n", args.mode.c_str(),
              trace.size(), season);
  std::printf("  phi=%+.6f theta=%+.6f Phi_s=%+.6f Theta_s=%+.6f sigma=%.6f\n",
              model.params.ar, model.params.ma, model.params.sar,
              model.params.sma, model.params.sigma);
  std::printf("  css=%.6g over %zu residuals, %s after %d iterations\n",
              model.objective_value, model.n_effective,
              model.converged ? "converged" : "budget exhausted",
              model.iterations);
  std::printf("  model -> %s\n", args.out_path.c_str());
}

// ---- generate ---------------------------------------------------------

struct GenerateArgs {
  std::string model_path, out_path, format = "csv";
  std::int64_t length = 0;
  std::uint64_t seed = 0;
  std::int64_t burn_in = -1;
  double init_level = 0.0;
  double clamp_floor = 0.0;
  double fps = 30.0;
};

void run_generate(const GenerateArgs& args) {
  const auto [params, mode] = samtk::sam_params_from_json(load_model_json(args.model_path));

  samtk::GenerationConfig config;
  config.length = args.length;
  config.seed = args.seed;
  config.burn_in = args.burn_in;
  config.init_level = args.init_level;
  config.clamp_floor = args.clamp_floor;
  config.frame_rate = args.fps;
  const samtk::FrameTrace trace = samtk::generate(params, mode, config);

  samtk::save_trace(trace, args.out_path, format_from_string(args.format));

  json sidecar;
  sidecar["meta"] =
      make_meta("generate", {{"model", args.model_path},
                             {"length", args.length},
                             {"seed", args.seed},
                             {"burn_in", config.effective_burn_in(params.season)},
                             {"init_level", args.init_level},
                             {"clamp_floor", args.clamp_floor},
                             {"frame_rate", args.fps},
                             {"format", args.format},
                             {"rng", samtk::kRngAlgorithm}});
  sidecar["params"] = samtk::to_json(params, mode);
  sidecar["trace"] = {{"path", args.out_path}, {"frames", trace.size()}};
  write_artifact(args.out_path + ".json", sidecar);

  std::printf("generated %zu frames -> %s (sidecar %s.json)\n", trace.size(),
              args.out_path.c_str(), args.out_path.c_str());
}

// ---- predict ----------------------------------------------------------

struct PredictArgs {
  std::string model_path, trace_path, out_path, format = "csv";
  std::string season = "auto", mode = "eq3_literal";
  double fps = 30.0;
  int horizon = 0;
  bool evaluate = false;
  double split = 0.6;
  int ar_order = 1;
  int refit_every = 0;
  int max_period = 32;
  int max_evals = 2000;
};

void run_predict(const PredictArgs& args) {
  const samtk::FrameTrace trace =
      samtk::load_trace(args.trace_path, format_from_string(args.format), args.fps);

  if (args.evaluate) {
    const int season = resolve_season(trace, args.season, args.max_period);
    samtk::EvaluationOptions options;
    options.ar_order = args.ar_order;
    options.refit_every = args.refit_every;
    options.fit.simplex.max_evaluations = args.max_evals;
    const samtk::PredictionReport report = samtk::evaluate_predictors(
        trace, season, args.horizon, args.split,
        samtk::mode_from_string(args.mode), options);

    json out;
    out["meta"] = make_meta("predict", {{"trace", args.trace_path},
                                        {"format", args.format},
                                        {"frame_rate", args.fps},
                                        {"evaluate", true},
                                        {"season", season},
                                        {"horizon", args.horizon},
                                        {"split", args.split},
                                        {"ar_order", args.ar_order},
                                        {"refit_every", args.refit_every},
                                        {"mode", args.mode}});
    out["evaluation"] = samtk::to_json(report);
    write_artifact(args.out_path, out);

    std::printf("rolling-origin evaluation over %zu origins (h=%d)\n",
                report.origins, report.horizon);
    std::printf("  SAM  rmse=%.3f mae=%.3f mre=%.4f\n", report.sam.rmse,
                report.sam.mae, report.sam.mre);
    std::printf("  AR%d  rmse=%.3f mae=%.3f mre=%.4f\n", report.ar_order,
                report.ar.rmse, report.ar.mae, report.ar.mre);
    std::printf("  improvement over AR: %.2f%%\n",
                100.0 * report.improvement_ratio);
    std::printf("  report -> %s\n", args.out_path.c_str());
    return;
  }

  if (args.model_path.empty())
    throw std::runtime_error("cli: forecast mode requires --model (or pass --evaluate)");
  const samtk::FittedModel model =
      samtk::fitted_model_from_json(load_model_json(args.model_path));
  const samtk::Forecast fc = samtk::forecast(model, trace, args.horizon);

  json out;
  out["meta"] = make_meta("predict", {{"model", args.model_path},
                                      {"trace", args.trace_path},
                                      {"format", args.format},
                                      {"frame_rate", args.fps},
                                      {"evaluate", false},
                                      {"horizon", args.horizon}});
  out["forecast"] = samtk::to_json(fc);
  write_artifact(args.out_path, out);
  std::printf("forecast %d steps from frame %zu -> %s\n", fc.horizon,
              fc.origin, args.out_path.c_str());
}

// ---- simulate ----------------------------------------------------------

struct SimulateArgs {
  std::string scenario_path, out_path, scheduler_override;
  bool intervals = false;
};

void run_simulate(const SimulateArgs& args) {
  samtk::Scenario scenario = samtk::load_scenario_file(args.scenario_path);
  if (!args.scheduler_override.empty())
    scenario.config.scheduler =
        samtk::scheduler_from_string(args.scheduler_override);

  const samtk::SimReport report = samtk::simulate(scenario.flows, scenario.config);

  json out;
  out["meta"] = make_meta(
      "simulate",
      {{"scenario", args.scenario_path},
       {"scheduler", samtk::to_string(scenario.config.scheduler)},
       {"capacity", scenario.config.capacity},
       {"interval_seconds", scenario.config.interval_seconds},
       {"duration", scenario.config.duration},
       {"drop_expired", scenario.config.drop_expired},
       {"seed", scenario.config.seed}});
  out["report"] = samtk::to_json(report, args.intervals);
  write_artifact(args.out_path, out);

  std::printf("%s over %lld intervals, capacity %lld B/interval\n",
              samtk::to_string(scenario.config.scheduler),
              static_cast<long long>(scenario.config.duration),
              static_cast<long long>(scenario.config.capacity));
  std::printf("%4s %14s %14s %10s %10s %10s %10s\n", "flow", "offered",
              "served", "on_time", "missed", "dropped", "delay");
  for (const samtk::FlowReport& f : report.flows)
    std::printf("%4d %14lld %14lld %10lld %10lld %10lld %10.2f\n", f.id,
                static_cast<long long>(f.bytes_offered),
                static_cast<long long>(f.bytes_served),
                static_cast<long long>(f.frames_on_time),
                static_cast<long long>(f.frames_missed),
                static_cast<long long>(f.frames_dropped), f.mean_delay);
  std::printf("utilization %.4f, fairness %.6f\n", report.utilization,
              report.fairness);
  std::printf("report -> %s\n", args.out_path.c_str());
}

// ---- analyze -----------------------------------------------------------

struct AnalyzeArgs {
  std::string traces_dir, out_prefix, format = "csv";
  double fps = 30.0;
  int max_period = 32;
  int pca_keep = 0;    // 0 = skip
  int kmeans_k = 0;    // 0 = skip
  std::uint64_t seed = 0;
  bool seed_set = false;
  int max_iters = 100;
};

void run_analyze(const AnalyzeArgs& args) {
  const samtk::TraceFormat format = format_from_string(args.format);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.traces_dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw std::runtime_error("cli: no trace files in '" + args.traces_dir + "'");

  std::vector<samtk::FeatureVector> features;
  for (const fs::path& path : files) {
    const samtk::FrameTrace trace =
        samtk::load_trace(path.string(), format, args.fps);
    features.push_back(samtk::make_feature_vector(trace, args.max_period,
                                                  path.filename().string()));
  }

  // Feature table as CSV, one row per trace.
  std::string table = "name";
  for (const std::string& name : samtk::feature_names()) table += "," + name;
  table += "\n";
  char cell[64];
  for (const samtk::FeatureVector& fv : features) {
    table += fv.name;
    for (double v : fv.values) {
      std::snprintf(cell, sizeof cell, ",%.10g", v);
      table += cell;
    }
    table += "\n";
  }
  const std::string features_path = args.out_prefix + "_features.csv";
  write_text(features_path, table);
  std::printf("wrote %zu feature vectors -> %s\n", features.size(),
              features_path.c_str());

  const json config = {{"traces", args.traces_dir},
                       {"format", args.format},
                       {"frame_rate", args.fps},
                       {"max_period", args.max_period},
                       {"pca", args.pca_keep},
                       {"kmeans", args.kmeans_k},
                       {"seed", args.seed},
                       {"max_iterations", args.max_iters}};

  if (args.pca_keep == 0 && args.kmeans_k == 0) return;

  // Constant columns carry no information and standardization rejects them;
  // drop them here and say so, keeping the library contract strict.
  std::vector<std::size_t> kept;
  json kept_names = json::array(), dropped_names = json::array();
  for (std::size_t c = 0; c < samtk::feature_names().size(); ++c) {
    bool constant = true;
    for (const samtk::FeatureVector& fv : features)
      constant = constant && fv.values[c] == features.front().values[c];
    if (constant) {
      dropped_names.push_back(samtk::feature_names()[c]);
    } else {
      kept.push_back(c);
      kept_names.push_back(samtk::feature_names()[c]);
    }
  }
  if (kept.empty())
    throw std::runtime_error("cli: every feature is constant across the corpus");
  if (!dropped_names.empty())
    std::printf("dropping %zu constant feature(s): %s\n", dropped_names.size(),
                dropped_names.dump().c_str());
  std::vector<samtk::FeatureVector> reduced = features;
  for (samtk::FeatureVector& fv : reduced) {
    std::vector<double> vals;
    vals.reserve(kept.size());
    for (std::size_t c : kept) vals.push_back(fv.values[c]);
    fv.values = std::move(vals);
  }

  if (args.pca_keep > 0) {
    const samtk::PcaResult result = samtk::pca(reduced, args.pca_keep);
    json out;
    out["meta"] = make_meta("analyze", config);
    out["pca"] = samtk::to_json(result);
    out["features_used"] = kept_names;
    out["features_dropped"] = dropped_names;
    json names = json::array();
    for (const samtk::FeatureVector& fv : features) names.push_back(fv.name);
    out["names"] = names;
    const std::string path = args.out_prefix + "_pca.json";
    write_artifact(path, out);
    std::printf("pca: kept %d components", args.pca_keep);
    for (double r : result.explained_ratios) std::printf(" %.3f", r);
    std::printf(" (explained ratios) -> %s\n", path.c_str());
  }

  if (args.kmeans_k > 0) {
    if (!args.seed_set)
      throw std::runtime_error("cli: --kmeans requires --seed");
    // Features are standardized before clustering so no column dominates.
    const std::vector<std::vector<double>> rows = samtk::standardize(reduced);
    const samtk::ClusterResult result =
        samtk::kmeans(rows, args.kmeans_k, args.seed, args.max_iters);
    json out;
    out["meta"] = make_meta("analyze", config);
    out["clusters"] = samtk::to_json(result);
    out["features_used"] = kept_names;
    out["features_dropped"] = dropped_names;
    json members = json::array();
    for (std::size_t i = 0; i < features.size(); ++i)
      members.push_back({{"name", features[i].name},
                         {"cluster", result.assignment[i]}});
    out["members"] = members;
    const std::string path = args.out_prefix + "_clusters.json";
    write_artifact(path, out);
    std::printf("kmeans: k=%d wcss=%.6g after %d iterations -> %s\n",
                args.kmeans_k, result.wcss, result.iterations, path.c_str());
  }
}

// ---- compare -----------------------------------------------------------

struct CompareArgs {
  std::string reference_path, candidate_path, out_path, format = "csv";
  std::string season = "auto";
  double fps = 30.0;
  int max_period = 32;
};

void run_compare(const CompareArgs& args) {
  const samtk::TraceFormat format = format_from_string(args.format);
  const samtk::FrameTrace reference =
      samtk::load_trace(args.reference_path, format, args.fps);
  const samtk::FrameTrace candidate =
      samtk::load_trace(args.candidate_path, format, args.fps);
  const int season = resolve_season(reference, args.season, args.max_period);

  const samtk::ComparisonReport report =
      samtk::compare_traces(reference, candidate, season);

  json out;
  out["meta"] = make_meta("compare", {{"reference", args.reference_path},
                                      {"candidate", args.candidate_path},
                                      {"format", args.format},
                                      {"frame_rate", args.fps},
                                      {"season", season}});
  out["comparison"] = samtk::to_json(report);
  write_artifact(args.out_path, out);

  std::printf("acf distance %.6f over %d lags, KS %.6f\n", report.acf_distance,
              report.acf_lags, report.ks);
  std::printf("mean %.2f vs %.2f (%+.2f%%), std %.2f vs %.2f (%+.2f%%)\n",
              report.mean_a, report.mean_b, 100.0 * report.mean_relative_delta,
              report.std_a, report.std_b, 100.0 * report.std_relative_delta);
  std::printf("report -> %s\n", args.out_path.c_str());
}

void print_error(const std::string& command, const std::string& message) {
  const json err = {{"error", {{"command", command}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SAM video-traffic model and downlink scheduler toolkit"};
  app.require_subcommand(1);

  FitArgs fit;
  CLI::App* fit_cmd = app.add_subcommand("fit", "Fit SAM coefficients to a trace");
  fit_cmd->add_option("--trace", fit.trace_path, "Input trace file")->required();
  fit_cmd->add_option("--format", fit.format, "Trace format: csv|sizes");
  fit_cmd->add_option("--fps", fit.fps, "Frames per second (default 30)");
  fit_cmd->add_option("--season", fit.season, "Seasonal period or 'auto'");
  fit_cmd->add_option("--max-period", fit.max_period,
                      "Deepest lag for seasonality detection (default 32)");
  fit_cmd->add_option("--mode", fit.mode,
                      "Differencing mode: eq3_literal|standard_seasonal");
  fit_cmd->add_option("--max-evals", fit.max_evals,
                      "Objective evaluation budget (default 2000)");
  fit_cmd->add_option("--out", fit.out_path, "Model JSON output")->required();

  GenerateArgs gen;
  CLI::App* gen_cmd =
      app.add_subcommand("generate", "Generate a synthetic trace from a model");
  gen_cmd->add_option("--model", gen.model_path, "Model/params JSON")->required();
  gen_cmd->add_option("--length", gen.length, "Frames to emit")->required();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->required();
  gen_cmd->add_option("--burn-in", gen.burn_in,
                      "Discarded warm-up frames (default 10*season)");
  gen_cmd->add_option("--init-level", gen.init_level, "Warm-up level");
  gen_cmd->add_option("--clamp-floor", gen.clamp_floor,
                      "Output floor in bytes (default 0)");
  gen_cmd->add_option("--fps", gen.fps, "Frame rate of the trace (default 30)");
  gen_cmd->add_option("--format", gen.format, "Output format: csv|sizes");
  gen_cmd->add_option("--out", gen.out_path, "Trace output path")->required();

  PredictArgs pred;
  CLI::App* pred_cmd = app.add_subcommand(
      "predict", "Forecast a trace, or evaluate SAM against the AR baseline");
  pred_cmd->add_option("--model", pred.model_path,
                       "Model JSON (forecast mode)");
  pred_cmd->add_option("--trace", pred.trace_path, "Input trace")->required();
  pred_cmd->add_option("--format", pred.format, "Trace format: csv|sizes");
  pred_cmd->add_option("--fps", pred.fps, "Frames per second (default 30)");
  pred_cmd->add_option("--horizon", pred.horizon, "Forecast steps")->required();
  pred_cmd->add_flag("--evaluate", pred.evaluate,
                     "Rolling-origin SAM vs AR evaluation");
  pred_cmd->add_option("--season", pred.season,
                       "Seasonal period or 'auto' (evaluate mode)");
  pred_cmd->add_option("--split", pred.split,
                       "Fit fraction for evaluation (default 0.6)");
  pred_cmd->add_option("--ar-order", pred.ar_order,
                       "AR baseline order (default 1)");
  pred_cmd->add_option("--refit-every", pred.refit_every,
                       "Refit cadence in origins (default 0 = never)");
  pred_cmd->add_option("--max-period", pred.max_period,
                       "Deepest lag for --season auto");
  pred_cmd->add_option("--max-evals", pred.max_evals,
                       "Objective evaluation budget (default 2000)");
  pred_cmd->add_option("--mode", pred.mode,
                       "Differencing mode (evaluate mode)");
  pred_cmd->add_option("--out", pred.out_path, "Report output")->required();

  SimulateArgs sim;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "Run a downlink scheduling scenario");
  sim_cmd->add_option("--scenario", sim.scenario_path, "Scenario JSON")->required();
  sim_cmd->add_option("--scheduler", sim.scheduler_override,
                      "Override the scenario's scheduler: edf|drr|edf-drr");
  sim_cmd->add_flag("--intervals", sim.intervals,
                    "Include per-interval stats in the report");
  sim_cmd->add_option("--out", sim.out_path, "Report output")->required();

  AnalyzeArgs ana;
  CLI::App* ana_cmd = app.add_subcommand(
      "analyze", "Feature extraction, PCA and clustering over a trace corpus");
  ana_cmd->add_option("--traces", ana.traces_dir, "Directory of traces")->required();
  ana_cmd->add_option("--format", ana.format, "Trace format: csv|sizes");
  ana_cmd->add_option("--fps", ana.fps, "Frames per second (default 30)");
  ana_cmd->add_option("--max-period", ana.max_period,
                      "Deepest lag for seasonality detection (default 32)");
  ana_cmd->add_option("--pca", ana.pca_keep, "Principal components to keep");
  ana_cmd->add_option("--kmeans", ana.kmeans_k, "Number of k-means clusters");
  ana_cmd->add_option("--seed", ana.seed, "RNG seed (required with --kmeans)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { ana.seed_set = true; });
  ana_cmd->add_option("--max-iters", ana.max_iters,
                      "k-means iteration cap (default 100)");
  ana_cmd->add_option("--out-prefix", ana.out_prefix, "Artifact path prefix")
      ->required();

  CompareArgs cmp;
  CLI::App* cmp_cmd = app.add_subcommand(
      "compare", "Distribution/ACF comparison of two traces");
  cmp_cmd->add_option("--reference", cmp.reference_path, "Reference trace")
      ->required();
  cmp_cmd->add_option("--candidate", cmp.candidate_path, "Candidate trace")
      ->required();
  cmp_cmd->add_option("--format", cmp.format, "Trace format: csv|sizes");
  cmp_cmd->add_option("--fps", cmp.fps, "Frames per second (default 30)");
  cmp_cmd->add_option("--season", cmp.season,
                      "Seasonal period or 'auto' (from the reference)");
  cmp_cmd->add_option("--max-period", cmp.max_period,
                      "Deepest lag for --season auto");
  cmp_cmd->add_option("--out", cmp.out_path, "Report output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("parse", e.what());
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (fit_cmd->parsed()) run_fit(fit);
    else if (gen_cmd->parsed()) run_generate(gen);
    else if (pred_cmd->parsed()) run_predict(pred);
    else if (sim_cmd->parsed()) run_simulate(sim);
    else if (ana_cmd->parsed()) run_analyze(ana);
    else if (cmp_cmd->parsed()) run_compare(cmp);
  } catch (const std::exception& e) {
    print_error(command, e.what());
    return 1;
  }
  return 0;
}
