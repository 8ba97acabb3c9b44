#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "samtk/trace.hpp"

namespace samtk {

enum class SchedulerKind { Edf, Drr, EdfDrr };

/// One downlink flow: a frame-size trace replayed at its frame rate, a
/// relative deadline, and a DRR quantum that doubles as the flow's fairness
/// weight.
struct Flow {
  int id = 0;
  FrameTrace trace;
  std::int64_t deadline_offset = 1;  // intervals after arrival, >= 1
  std::int64_t quantum = 1;          // bytes added per DRR visit, >= 1
};

struct SimConfig {
  std::int64_t capacity = 0;        // bytes servable per interval, >= 1
  double interval_seconds = 0.005;  // slot length
  std::int64_t duration = 0;        // number of intervals, >= 1
  SchedulerKind scheduler = SchedulerKind::Drr;
  bool drop_expired = false;        // drop queued frames past their deadline
  std::uint64_t seed = 0;           // recorded in reports; the loop is deterministic
};

/// A frame sitting in (or gone through) a flow queue. Arrival interval of
/// frame k is floor(k / frame_rate / interval_seconds); the deadline is
/// absolute: service must finish by the end of interval `deadline`.
struct QueuedFrame {
  std::int64_t size = 0;
  std::int64_t remaining = 0;
  std::int64_t arrival = 0;
  std::int64_t deadline = 0;
};

using FlowQueues = std::vector<std::deque<QueuedFrame>>;

struct ServiceRecord {
  int flow = 0;
  std::int64_t finish = 0;  // interval in which the last byte was served
  QueuedFrame frame;
};

/// Per-interval allocators. Each call serves at most `capacity` bytes from
/// `queues`, adds per-flow bytes to `served`, and appends finished frames to
/// `completed`. A frame may be served across calls: partial service happens
/// only at a capacity boundary. All ties break toward the lower flow index.
class EdfScheduler {
 public:
  void allocate(FlowQueues& queues, std::int64_t capacity, std::int64_t now,
                std::span<std::int64_t> served,
                std::vector<ServiceRecord>& completed);
};

/// Classic deficit round robin: a persistent cursor sweeps the flows; each
/// visit adds one quantum to the flow's deficit and serves head-of-line
/// frames while they fit inside it. A flow found empty forfeits its deficit.
/// Running out of capacity mid-visit suspends the visit: the next call
/// resumes at the same flow without adding another quantum.
class DrrScheduler {
 public:
  explicit DrrScheduler(std::vector<std::int64_t> quanta);
  void allocate(FlowQueues& queues, std::int64_t capacity, std::int64_t now,
                std::span<std::int64_t> served,
                std::vector<ServiceRecord>& completed);
  const std::vector<std::int64_t>& deficits() const { return deficits_; }

 private:
  std::vector<std::int64_t> quanta_;
  std::vector<std::int64_t> deficits_;
  std::size_t cursor_ = 0;
  bool mid_visit_ = false;
};

/// Deadline-ordered DRR: work proceeds in passes over the backlogged flows;
/// within a pass each flow is visited at most once, in order of earliest
/// head-of-line deadline, and served under the same deficit gate as DRR.
/// The pass (and a suspended mid-frame visit) persists across intervals.
/// With huge quanta this degenerates to EDF; with equal deadlines, to DRR.
class EdfDrrScheduler {
 public:
  explicit EdfDrrScheduler(std::vector<std::int64_t> quanta);
  void allocate(FlowQueues& queues, std::int64_t capacity, std::int64_t now,
                std::span<std::int64_t> served,
                std::vector<ServiceRecord>& completed);
  const std::vector<std::int64_t>& deficits() const { return deficits_; }

 private:
  std::vector<std::int64_t> quanta_;
  std::vector<std::int64_t> deficits_;
  std::vector<char> visited_;  // current pass
  std::size_t current_ = 0;
  bool mid_visit_ = false;
};

struct FlowReport {
  int id = 0;
  std::int64_t bytes_offered = 0;
  std::int64_t bytes_served = 0;
  std::int64_t bytes_dropped = 0;
  std::int64_t frames_arrived = 0;
  std::int64_t frames_completed = 0;
  std::int64_t frames_on_time = 0;
  /// Late completions + drops + frames still queued at the end whose
  /// deadline fell inside the horizon.
  std::int64_t frames_missed = 0;
  std::int64_t frames_dropped = 0;
  double mean_delay = 0.0;  // completion - arrival, intervals, completed frames
};

struct IntervalStat {
  std::int64_t queued_bytes = 0;  // backlog after arrivals, before service
  std::int64_t served_bytes = 0;
};

struct SimReport {
  std::vector<FlowReport> flows;
  std::int64_t total_served = 0;
  double utilization = 0.0;  // total_served / (capacity * duration)
  /// Jain index over per-flow bytes_served / quantum (weight-normalized
  /// throughput); 1.0 when nothing was served at all.
  double fairness = 0.0;
  std::vector<IntervalStat> intervals;
};

/// Slotted downlink simulation: per interval, enqueue arrivals (optionally
/// dropping frames already past their deadline), then hand the configured
/// scheduler one capacity's worth of service. Flow ids must be unique and
/// every trace must cover the simulated horizon. Fully deterministic.
SimReport simulate(const std::vector<Flow>& flows, const SimConfig& config);

/// Jain fairness index (sum v)^2 / (n * sum v^2), in (0, 1]; requires a
/// non-empty sample with a non-zero sum of squares.
double jain_fairness(std::span<const double> values);

}  // namespace samtk
