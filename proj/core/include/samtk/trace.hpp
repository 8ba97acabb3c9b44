#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace samtk {

enum class FrameKind : char { I = 'I', P = 'P', B = 'B', Unknown = 'U' };

char to_char(FrameKind kind);
FrameKind frame_kind_from_char(char c);  // throws on anything but I/P/B/U

struct Frame {
  FrameKind kind = FrameKind::Unknown;
  std::int64_t size = 0;  // bytes, always >= 0
};

/// A video frame-size series in display order at a fixed frame rate; the
/// position in `frames` is the time index of the series.
struct FrameTrace {
  std::vector<Frame> frames;
  double frame_rate = 30.0;  // frames per second
  std::string source;        // provenance tag (file path or generator note)

  std::size_t size() const { return frames.size(); }
  bool empty() const { return frames.empty(); }

  /// Frame sizes as a double series, the form every model consumes.
  std::vector<double> sizes() const;
};

/// On-disk trace layouts. Csv is `index,frame_type,size_bytes` with a header
/// line; SizesOnly is one non-negative integer per line.
enum class TraceFormat { Csv, SizesOnly };

struct MomentStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std_dev = 0.0;   // sample (n-1) standard deviation
  double min = 0.0;
  double max = 0.0;
  double skewness = 0.0;  // m3 / m2^1.5 with 1/n central moments
  double kurtosis = 0.0;  // excess: m4 / m2^2 - 3
};

struct TraceStats {
  MomentStats overall;
  std::map<FrameKind, MomentStats> per_kind;  // only kinds that occur
};

/// Parse a trace from text. Malformed rows raise std::runtime_error with a
/// 1-based line number (the CSV header is line 1). CRLF input is accepted.
FrameTrace parse_trace(std::istream& in, TraceFormat format,
                       double frame_rate = 30.0, std::string source = {});
FrameTrace parse_trace(const std::string& text, TraceFormat format,
                       double frame_rate = 30.0, std::string source = {});
FrameTrace load_trace(const std::string& path, TraceFormat format,
                      double frame_rate = 30.0);

/// Serialize with LF line endings; parse(serialize(t)) preserves every frame.
void serialize_trace(const FrameTrace& trace, std::ostream& out, TraceFormat format);
std::string serialize_trace(const FrameTrace& trace, TraceFormat format);
void save_trace(const FrameTrace& trace, const std::string& path, TraceFormat format);

/// Dominant period of the size series: the lag in [2, max_period] with the
/// highest autocorrelation (ties break toward the smaller lag). Requires at
/// least 3*max_period frames and a non-constant series.
int detect_seasonality(const FrameTrace& trace, int max_period);

/// Overall and per-frame-kind moment summaries.
TraceStats summarize(const FrameTrace& trace);

}  // namespace samtk
