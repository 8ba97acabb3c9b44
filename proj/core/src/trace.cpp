#include "samtk/trace.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "samtk/stats.hpp"

namespace samtk {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("trace_model: " + what);
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  fail("line " + std::to_string(line) + ": " + what);
}

// Strips a trailing CR so CRLF input parses like LF input.
void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

std::int64_t parse_size(const std::string& field, std::size_t line) {
  if (field.empty()) fail_at(line, "empty size field");
  for (char c : field)
    if (c < '0' || c > '9')
      fail_at(line, "size is not a non-negative integer: '" + field + "'");
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(field.c_str(), &end, 10);
  if (errno == ERANGE || end != field.c_str() + field.size())
    fail_at(line, "size out of range: '" + field + "'");
  return v;
}

FrameTrace parse_csv(std::istream& in, double frame_rate, std::string source) {
  FrameTrace trace;
  trace.frame_rate = frame_rate;
  trace.source = std::move(source);

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) fail("empty input, expected a header line");
  ++line_no;
  chomp(line);
  if (line != "index,frame_type,size_bytes")
    fail_at(line_no, "bad header, expected 'index,frame_type,size_bytes'");

  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (blank(line)) continue;

    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        line.find(',', c2 + 1) != std::string::npos)
      fail_at(line_no, "expected 3 comma-separated fields");

    const std::string index = line.substr(0, c1);
    const std::string kind = line.substr(c1 + 1, c2 - c1 - 1);
    const std::string size = line.substr(c2 + 1);

    if (index.empty() ||
        index.find_first_not_of("0123456789") != std::string::npos)
      fail_at(line_no, "index is not a non-negative integer: '" + index + "'");
    if (kind.size() != 1) fail_at(line_no, "frame type must be one character");
    Frame frame;
    try {
      frame.kind = frame_kind_from_char(kind[0]);
    } catch (const std::exception&) {
      fail_at(line_no, "unknown frame type '" + kind + "'");
    }
    frame.size = parse_size(size, line_no);
    trace.frames.push_back(frame);
  }
  if (trace.frames.empty()) fail("no frame rows found");
  return trace;
}

FrameTrace parse_sizes(std::istream& in, double frame_rate, std::string source) {
  FrameTrace trace;
  trace.frame_rate = frame_rate;
  trace.source = std::move(source);

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (blank(line)) continue;
    trace.frames.push_back({FrameKind::Unknown, parse_size(line, line_no)});
  }
  if (trace.frames.empty()) fail("no frame sizes found");
  return trace;
}

MomentStats moments(const std::vector<double>& xs) {
  MomentStats m;
  m.count = xs.size();
  if (xs.empty()) return m;

  double sum = 0.0;
  m.min = std::numeric_limits<double>::infinity();
  m.max = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    sum += x;
    m.min = std::min(m.min, x);
    m.max = std::max(m.max, x);
  }
  m.mean = sum / static_cast<double>(xs.size());

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : xs) {
    const double d = x - m.mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  const double n = static_cast<double>(xs.size());
  m.std_dev = xs.size() > 1 ? std::sqrt(m2 / (n - 1.0)) : 0.0;
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 > 0.0) {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.kurtosis = m4 / (m2 * m2) - 3.0;
  }
  return m;
}

}  // namespace

char to_char(FrameKind kind) { return static_cast<char>(kind); }

FrameKind frame_kind_from_char(char c) {
  switch (c) {
    case 'I': return FrameKind::I;
    case 'P': return FrameKind::P;
    case 'B': return FrameKind::B;
    case 'U': return FrameKind::Unknown;
    default: fail(std::string("unknown frame type '") + c + "'");
  }
}

std::vector<double> FrameTrace::sizes() const {
  std::vector<double> out;
  out.reserve(frames.size());
  for (const Frame& f : frames) out.push_back(static_cast<double>(f.size));
  return out;
}

FrameTrace parse_trace(std::istream& in, TraceFormat format, double frame_rate,
                       std::string source) {
  if (!(frame_rate > 0.0)) fail("frame rate must be positive");
  return format == TraceFormat::Csv ? parse_csv(in, frame_rate, std::move(source))
                                    : parse_sizes(in, frame_rate, std::move(source));
}

FrameTrace parse_trace(const std::string& text, TraceFormat format,
                       double frame_rate, std::string source) {
  std::istringstream in(text);
  return parse_trace(in, format, frame_rate, std::move(source));
}

FrameTrace load_trace(const std::string& path, TraceFormat format,
                      double frame_rate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open trace file '" + path + "'");
  return parse_trace(in, format, frame_rate, path);
}

void serialize_trace(const FrameTrace& trace, std::ostream& out,
                     TraceFormat format) {
  if (format == TraceFormat::Csv) {
    out << "index,frame_type,size_bytes\n";
    for (std::size_t i = 0; i < trace.frames.size(); ++i)
      out << i << ',' << to_char(trace.frames[i].kind) << ','
          << trace.frames[i].size << '\n';
  } else {
    for (const Frame& f : trace.frames) out << f.size << '\n';
  }
}

std::string serialize_trace(const FrameTrace& trace, TraceFormat format) {
  std::ostringstream out;
  serialize_trace(trace, out, format);
  return out.str();
}

void save_trace(const FrameTrace& trace, const std::string& path,
                TraceFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write trace file '" + path + "'");
  serialize_trace(trace, out, format);
  if (!out) fail("short write on '" + path + "'");
}

int detect_seasonality(const FrameTrace& trace, int max_period) {
  if (max_period < 2) fail("max_period must be at least 2");
  if (trace.size() < static_cast<std::size_t>(3 * max_period))
    fail("seasonality detection needs at least 3*max_period frames");

  const std::vector<double> xs = trace.sizes();
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  if (*lo == *hi) fail("seasonality is undefined for a constant series");
  const std::vector<double> rho = acf(xs, max_period);

  int best = 2;
  for (int lag = 3; lag <= max_period; ++lag)
    if (rho[static_cast<std::size_t>(lag)] > rho[static_cast<std::size_t>(best)])
      best = lag;
  return best;
}

TraceStats summarize(const FrameTrace& trace) {
  if (trace.empty()) fail("cannot summarize an empty trace");

  TraceStats stats;
  stats.overall = moments(trace.sizes());

  std::map<FrameKind, std::vector<double>> buckets;
  for (const Frame& f : trace.frames)
    if (f.kind != FrameKind::Unknown)
      buckets[f.kind].push_back(static_cast<double>(f.size));
  for (const auto& [kind, xs] : buckets) stats.per_kind[kind] = moments(xs);
  return stats;
}

}  // namespace samtk
