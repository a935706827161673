#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace biarc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;       ///< unreadable or malformed input, bad arguments
inline constexpr int kExitFailed = 2;   ///< no path, failed run, or oracle disagreement

/// Empty `out` means standard output.
struct PlanArgs {
    std::filesystem::path scenario;
    std::filesystem::path out;
    double ds = 0.01;
};

struct SimulateArgs {
    std::filesystem::path scenario;
    std::filesystem::path out;
    std::optional<std::uint64_t> seed;
    bool include_timing = true;
};

struct ValidateArgs {
    std::filesystem::path scenario;
    std::size_t trials = 1000;
    std::optional<std::uint64_t> seed;
};

struct BenchArgs {
    std::filesystem::path dir;
    std::filesystem::path out;
    std::optional<std::uint64_t> seed;
    int jobs = 1;
};

/// One-shot plan from the first waypoint; writes the trace CSV.
int cmd_plan(const PlanArgs& a, std::ostream& log, std::ostream& stdout_sink);
/// Closed-loop run; writes the metrics record.
int cmd_simulate(const SimulateArgs& a, std::ostream& log, std::ostream& stdout_sink);
/// Closed form vs sampling oracle on random cases with the scenario's hitbox.
int cmd_validate(const ValidateArgs& a, std::ostream& log);
/// Runs every *.json scenario in the directory (sorted by file name) and
/// writes one CSV row per scenario.
int cmd_bench(const BenchArgs& a, std::ostream& log, std::ostream& stdout_sink);

inline constexpr const char* kBenchHeader = "scenario,plan_ms_median,plan_ms_max,path_m,time_s,prox_m,success";

}  // namespace biarc::cli
