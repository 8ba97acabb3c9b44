#include "samtk/scenario.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "samtk/generation.hpp"
#include "samtk/serialization.hpp"

namespace samtk {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("scenario: " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) fail(where + ": missing key '" + key + "'");
  return j.at(key);
}

double trace_mean(const FrameTrace& trace) {
  double acc = 0.0;
  for (const Frame& f : trace.frames) acc += static_cast<double>(f.size);
  return acc / static_cast<double>(trace.size());
}

std::string join_path(const std::string& base, const std::string& path) {
  if (base.empty() || path.empty() || path.front() == '/') return path;
  return base.back() == '/' ? base + path : base + "/" + path;
}

FrameTrace resolve_trace(const json& spec, const std::string& base_dir,
                         const std::string& where) {
  const std::string type = require(spec, "type", where).get<std::string>();
  if (type == "csv") {
    const std::string path = require(spec, "path", where).get<std::string>();
    const double fps = spec.value("frame_rate", 30.0);
    return load_trace(join_path(base_dir, path), TraceFormat::Csv, fps);
  }
  if (type == "sam") {
    auto [params, mode] = sam_params_from_json(require(spec, "params", where));
    GenerationConfig config;
    config.length = require(spec, "length", where).get<std::int64_t>();
    config.seed = require(spec, "seed", where).get<std::uint64_t>();
    config.init_level = require(spec, "init_level", where).get<double>();
    config.burn_in = spec.value("burn_in", std::int64_t{-1});
    config.clamp_floor = spec.value("clamp_floor", 0.0);
    config.frame_rate = spec.value("frame_rate", 30.0);
    return generate(params, mode, config);
  }
  fail(where + ": unknown trace type '" + type + "', expected 'csv' or 'sam'");
}

}  // namespace

Scenario load_scenario(const std::string& json_text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document root must be an object");

  Scenario scenario;
  scenario.config.interval_seconds =
      require(doc, "interval_seconds", "scenario").get<double>();
  scenario.config.duration = require(doc, "duration", "scenario").get<std::int64_t>();
  scenario.config.scheduler = scheduler_from_string(
      require(doc, "scheduler", "scenario").get<std::string>());
  scenario.config.drop_expired = doc.value("drop_expired", false);
  scenario.config.seed = doc.value("seed", std::uint64_t{0});

  const json& flows = require(doc, "flows", "scenario");
  if (!flows.is_array() || flows.empty()) fail("'flows' must be a non-empty array");

  double aggregate_demand = 0.0;  // mean bytes per interval across flows
  for (const json& fj : flows) {
    const std::string where =
        "flow " + std::to_string(scenario.flows.size());
    Flow flow;
    flow.id = require(fj, "id", where).get<int>();
    flow.deadline_offset =
        require(fj, "deadline_offset", where).get<std::int64_t>();
    flow.trace = resolve_trace(require(fj, "trace", where), base_dir, where);

    const double mean = trace_mean(flow.trace);
    flow.quantum =
        fj.contains("quantum")
            ? fj.at("quantum").get<std::int64_t>()
            : std::max<std::int64_t>(1, std::llround(mean));
    aggregate_demand += mean * flow.trace.frame_rate *
                        scenario.config.interval_seconds;
    scenario.flows.push_back(std::move(flow));
  }

  const bool has_bytes = doc.contains("capacity");
  const bool has_fraction = doc.contains("capacity_fraction");
  if (has_bytes == has_fraction)
    fail("exactly one of 'capacity' and 'capacity_fraction' is required");
  if (has_bytes) {
    scenario.config.capacity = doc.at("capacity").get<std::int64_t>();
  } else {
    scenario.capacity_fraction = doc.at("capacity_fraction").get<double>();
    if (!(scenario.capacity_fraction > 0.0))
      fail("'capacity_fraction' must be positive");
    scenario.config.capacity = std::max<std::int64_t>(
        1, std::llround(scenario.capacity_fraction * aggregate_demand));
  }
  return scenario;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const auto slash = path.find_last_of('/');
  const std::string base =
      slash == std::string::npos ? std::string{} : path.substr(0, slash);
  return load_scenario(buf.str(), base);
}

}  // namespace samtk
