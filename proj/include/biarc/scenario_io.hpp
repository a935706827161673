#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biarc/biarc.hpp"
#include "biarc/sim.hpp"

namespace biarc {

/// Malformed scenario text or an unreadable file.
class ScenarioFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON scenario. Every key except `waypoints` is optional; missing params
/// take the ScenarioParams defaults. The result has been validated.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario; doubles are written so they parse back bit-exact.
std::string serialize_scenario(const Scenario& sc);

struct TraceRow {
    double s;
    double x;
    double y;
    double theta;
    double curvature;
};

/// Samples every `ds` of arclength along the concatenated pieces, plus the
/// final pose. Zero-length pieces are skipped; at a boundary the row takes the
/// curvature of the piece that starts there.
std::vector<TraceRow> trace_rows(std::span<const ArcSegment> pieces, double ds);
std::vector<TraceRow> trace_rows(std::span<const Biarc> biarcs, double ds);

inline constexpr std::string_view kTraceHeader = "s,x,y,theta,curvature";

/// Header line, then one row per sample with 17 significant digits.
void write_trace_csv(std::ostream& os, std::span<const TraceRow> rows);

/// One JSON object mirroring MetricsReport. Wall-clock fields are dropped when
/// `include_timing` is false so the record is reproducible byte for byte.
std::string metrics_json(const MetricsReport& m, bool include_timing = true);

}  // namespace biarc
