#include "samtk/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace samtk {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("scheduler_sim: " + what);
}

bool any_queued(const FlowQueues& queues) {
  for (const auto& q : queues)
    if (!q.empty()) return true;
  return false;
}

// Serve the head of queue `i` with up to `budget` bytes. Returns the bytes
// moved; pops and records the frame when its last byte goes out.
std::int64_t serve_head(FlowQueues& queues, std::size_t i, std::int64_t budget,
                        std::int64_t now, std::span<std::int64_t> served,
                        std::vector<ServiceRecord>& completed) {
  QueuedFrame& head = queues[i].front();
  const std::int64_t take = std::min(head.remaining, budget);
  head.remaining -= take;
  served[i] += take;
  if (head.remaining == 0) {
    completed.push_back({static_cast<int>(i), now, head});
    queues[i].pop_front();
  }
  return take;
}

}  // namespace

void EdfScheduler::allocate(FlowQueues& queues, std::int64_t capacity,
                            std::int64_t now, std::span<std::int64_t> served,
                            std::vector<ServiceRecord>& completed) {
  std::int64_t budget = capacity;
  while (budget > 0) {
    // Earliest head-of-line deadline wins; ties go to the lower flow index.
    std::size_t pick = queues.size();
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < queues.size(); ++i) {
      if (queues[i].empty()) continue;
      if (queues[i].front().deadline < best) {
        best = queues[i].front().deadline;
        pick = i;
      }
    }
    if (pick == queues.size()) break;
    budget -= serve_head(queues, pick, budget, now, served, completed);
  }
}

DrrScheduler::DrrScheduler(std::vector<std::int64_t> quanta)
    : quanta_(std::move(quanta)), deficits_(quanta_.size(), 0) {
  for (std::int64_t q : quanta_)
    if (q < 1) fail("DRR quanta must be positive");
}

void DrrScheduler::allocate(FlowQueues& queues, std::int64_t capacity,
                            std::int64_t now, std::span<std::int64_t> served,
                            std::vector<ServiceRecord>& completed) {
  if (queues.size() != quanta_.size())
    fail("queue/quantum count mismatch");
  std::int64_t budget = capacity;
  while (budget > 0 && any_queued(queues)) {
    auto& q = queues[cursor_];
    if (q.empty()) {
      // An empty flow forfeits its deficit; backlogged flows keep theirs.
      deficits_[cursor_] = 0;
      mid_visit_ = false;
      cursor_ = (cursor_ + 1) % queues.size();
      continue;
    }
    // A suspended visit resumes without a fresh quantum.
    if (!mid_visit_) deficits_[cursor_] += quanta_[cursor_];
    mid_visit_ = false;

    while (budget > 0 && !q.empty() &&
           q.front().remaining <= deficits_[cursor_]) {
      const std::int64_t moved =
          serve_head(queues, cursor_, budget, now, served, completed);
      deficits_[cursor_] -= moved;
      budget -= moved;
    }

    if (q.empty()) {
      deficits_[cursor_] = 0;
      cursor_ = (cursor_ + 1) % queues.size();
    } else if (budget == 0 && q.front().remaining <= deficits_[cursor_]) {
      mid_visit_ = true;  // capacity ran out mid-frame; resume here next call
    } else {
      cursor_ = (cursor_ + 1) % queues.size();
    }
  }
}

EdfDrrScheduler::EdfDrrScheduler(std::vector<std::int64_t> quanta)
    : quanta_(std::move(quanta)),
      deficits_(quanta_.size(), 0),
      visited_(quanta_.size(), 0) {
  for (std::int64_t q : quanta_)
    if (q < 1) fail("DRR quanta must be positive");
}

void EdfDrrScheduler::allocate(FlowQueues& queues, std::int64_t capacity,
                               std::int64_t now, std::span<std::int64_t> served,
                               std::vector<ServiceRecord>& completed) {
  if (queues.size() != quanta_.size())
    fail("queue/quantum count mismatch");
  std::int64_t budget = capacity;
  while (budget > 0 && any_queued(queues)) {
    std::size_t pick;
    if (mid_visit_ && !queues[current_].empty()) {
      pick = current_;  // resume the suspended visit, no fresh quantum
    } else {
      // Next unvisited backlogged flow by earliest head deadline; when the
      // pass has covered every backlogged flow, start a new one.
      for (int attempt = 0; attempt < 2; ++attempt) {
        pick = queues.size();
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (std::size_t i = 0; i < queues.size(); ++i) {
          if (queues[i].empty() || visited_[i]) continue;
          if (queues[i].front().deadline < best) {
            best = queues[i].front().deadline;
            pick = i;
          }
        }
        if (pick != queues.size()) break;
        std::fill(visited_.begin(), visited_.end(), 0);
      }
      if (pick == queues.size()) break;  // unreachable: any_queued() held
      visited_[pick] = 1;
      deficits_[pick] += quanta_[pick];
    }
    mid_visit_ = false;

    auto& q = queues[pick];
    while (budget > 0 && !q.empty() && q.front().remaining <= deficits_[pick]) {
      const std::int64_t moved =
          serve_head(queues, pick, budget, now, served, completed);
      deficits_[pick] -= moved;
      budget -= moved;
    }

    if (q.empty()) {
      deficits_[pick] = 0;
    } else if (budget == 0 && q.front().remaining <= deficits_[pick]) {
      mid_visit_ = true;
      current_ = pick;
    }
  }
}

double jain_fairness(std::span<const double> values) {
  if (values.empty()) fail("Jain index of an empty sample");
  double sum = 0.0, sq = 0.0;
  for (double v : values) {
    sum += v;
    sq += v * v;
  }
  if (sq == 0.0) fail("Jain index is undefined when every value is zero");
  return (sum * sum) / (static_cast<double>(values.size()) * sq);
}

SimReport simulate(const std::vector<Flow>& flows, const SimConfig& config) {
  if (flows.empty()) fail("need at least one flow");
  if (config.capacity < 1) fail("capacity must be at least 1 byte per interval");
  if (!(config.interval_seconds > 0.0)) fail("interval_seconds must be positive");
  if (config.duration < 1) fail("duration must be at least 1 interval");

  std::set<int> ids;
  for (const Flow& flow : flows) {
    if (!ids.insert(flow.id).second)
      fail("duplicate flow id " + std::to_string(flow.id));
    if (flow.deadline_offset < 1) fail("deadline_offset must be at least 1");
    if (flow.quantum < 1) fail("quantum must be at least 1");
    // The trace must keep frames arriving through the whole horizon.
    const double horizon_frames = static_cast<double>(config.duration) *
                                  config.interval_seconds *
                                  flow.trace.frame_rate;
    if (static_cast<double>(flow.trace.size()) < horizon_frames)
      fail("flow " + std::to_string(flow.id) +
           ": trace too short for the simulated horizon");
  }

  // Report rows follow ascending flow id; scheduler indices follow suit so
  // "lower id wins ties" and "lower index wins ties" agree.
  std::vector<const Flow*> ordered;
  ordered.reserve(flows.size());
  for (const Flow& flow : flows) ordered.push_back(&flow);
  std::sort(ordered.begin(), ordered.end(),
            [](const Flow* a, const Flow* b) { return a->id < b->id; });

  const std::size_t nf = ordered.size();
  std::vector<std::int64_t> quanta(nf);
  for (std::size_t i = 0; i < nf; ++i) quanta[i] = ordered[i]->quantum;

  // Arrival schedule: frame k of a flow lands in the interval containing its
  // display time k / fps.
  struct Arrival {
    std::int64_t interval;
    std::int64_t size;
  };
  std::vector<std::vector<Arrival>> arrivals(nf);
  for (std::size_t i = 0; i < nf; ++i) {
    const FrameTrace& trace = ordered[i]->trace;
    for (std::size_t k = 0; k < trace.size(); ++k) {
      const auto interval = static_cast<std::int64_t>(
          std::floor(static_cast<double>(k) /
                     (trace.frame_rate * config.interval_seconds)));
      if (interval >= config.duration) break;
      arrivals[i].push_back({interval, trace.frames[k].size});
    }
  }

  EdfScheduler edf;
  DrrScheduler drr(quanta);
  EdfDrrScheduler edf_drr(quanta);

  FlowQueues queues(nf);
  std::vector<std::size_t> next_arrival(nf, 0);
  std::vector<std::int64_t> served(nf, 0);
  std::vector<ServiceRecord> completed;

  SimReport report;
  report.flows.resize(nf);
  report.intervals.reserve(static_cast<std::size_t>(config.duration));
  std::vector<double> delay_sum(nf, 0.0);

  for (std::int64_t now = 0; now < config.duration; ++now) {
    for (std::size_t i = 0; i < nf; ++i) {
      auto& row = report.flows[i];
      while (next_arrival[i] < arrivals[i].size() &&
             arrivals[i][next_arrival[i]].interval == now) {
        const std::int64_t size = arrivals[i][next_arrival[i]].size;
        ++next_arrival[i];
        ++row.frames_arrived;
        row.bytes_offered += size;
        if (size == 0) {
          // Zero-byte frames complete instantly; nothing to schedule.
          ++row.frames_completed;
          ++row.frames_on_time;
          continue;
        }
        queues[i].push_back(
            {size, size, now, now + ordered[i]->deadline_offset});
      }
      if (config.drop_expired) {
        while (!queues[i].empty() && queues[i].front().deadline < now) {
          const QueuedFrame& f = queues[i].front();
          row.bytes_dropped += f.remaining;
          ++row.frames_dropped;
          ++row.frames_missed;
          queues[i].pop_front();
        }
      }
    }

    IntervalStat stat;
    for (const auto& q : queues)
      for (const QueuedFrame& f : q) stat.queued_bytes += f.remaining;

    std::int64_t served_before = 0;
    for (std::int64_t v : served) served_before += v;
    const std::size_t completed_before = completed.size();
    switch (config.scheduler) {
      case SchedulerKind::Edf:
        edf.allocate(queues, config.capacity, now, served, completed);
        break;
      case SchedulerKind::Drr:
        drr.allocate(queues, config.capacity, now, served, completed);
        break;
      case SchedulerKind::EdfDrr:
        edf_drr.allocate(queues, config.capacity, now, served, completed);
        break;
    }

    for (std::size_t c = completed_before; c < completed.size(); ++c) {
      const ServiceRecord& rec = completed[c];
      auto& row = report.flows[static_cast<std::size_t>(rec.flow)];
      ++row.frames_completed;
      if (rec.finish <= rec.frame.deadline)
        ++row.frames_on_time;
      else
        ++row.frames_missed;
      delay_sum[static_cast<std::size_t>(rec.flow)] +=
          static_cast<double>(rec.finish - rec.frame.arrival);
    }

    std::int64_t served_after = 0;
    for (std::int64_t v : served) served_after += v;
    stat.served_bytes = served_after - served_before;
    report.intervals.push_back(stat);
  }

  std::int64_t total = 0;
  for (std::size_t i = 0; i < nf; ++i) {
    auto& row = report.flows[i];
    row.id = ordered[i]->id;
    row.bytes_served = served[i];
    total += served[i];
    // Frames still queued whose deadline fell inside the horizon are misses.
    for (const QueuedFrame& f : queues[i])
      if (f.deadline < config.duration) ++row.frames_missed;
    row.mean_delay = row.frames_completed > 0
                         ? delay_sum[i] / static_cast<double>(row.frames_completed)
                         : 0.0;
  }
  report.total_served = total;
  report.utilization =
      static_cast<double>(total) /
      (static_cast<double>(config.capacity) * static_cast<double>(config.duration));

  std::vector<double> normalized(nf);
  for (std::size_t i = 0; i < nf; ++i)
    normalized[i] =
        static_cast<double>(served[i]) / static_cast<double>(quanta[i]);
  bool all_zero = true;
  for (double v : normalized) all_zero = all_zero && v == 0.0;
  report.fairness = all_zero ? 1.0 : jain_fairness(normalized);
  return report;
}

}  // namespace samtk
