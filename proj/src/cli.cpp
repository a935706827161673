#include "biarc/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "biarc/errors.hpp"
#include "biarc/kernels.hpp"
#include "biarc/lattice.hpp"
#include "biarc/scenario_io.hpp"
#include "biarc/sim.hpp"

namespace biarc::cli {

namespace {

namespace fs = std::filesystem;

// Writes `text` to `path`, or to `fallback` when the path is empty.
bool emit(const fs::path& path, const std::string& text, std::ostream& fallback, std::ostream& log) {
    if (path.empty()) {
        fallback << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
        log << "error: cannot write " << path.string() << '\n';
        return false;
    }
    return true;
}

std::optional<Scenario> load(const fs::path& path, std::ostream& log) {
    try {
        return load_scenario(path);
    } catch (const ScenarioFormatError& e) {
        log << "error: " << path.string() << ": " << e.what() << '\n';
        return std::nullopt;
    }
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

int cmd_plan(const PlanArgs& a, std::ostream& log, std::ostream& stdout_sink) {
    if (!(a.ds > 0.0)) {
        log << "error: --ds must be positive\n";
        return kExitIo;
    }
    const std::optional<Scenario> sc = load(a.scenario, log);
    if (!sc) return kExitIo;
    const ScenarioParams& p = sc->params;

    PlannerParams pp;
    pp.lateral_step = p.lateral_step;
    pp.h_max = p.h_max;
    pp.horizon = p.horizon_m;
    pp.replan = ReplanParams(p.eta_l, p.eta_k);
    PlanSession session(build_waypoints_from_polyline(sc->waypoints, p.spacing_m), sc->hitbox, sc->obstacles, pp);
    const Waypoint& w0 = session.waypoints()[0];

    PlanResult plan;
    try {
        plan = session.plan(Pose(w0.position, w0.theta));
    } catch (const NoPathError& e) {
        log << "no path: " << e.what() << '\n';
        return kExitFailed;
    }

    std::ostringstream csv;
    const std::vector<TraceRow> rows = trace_rows(std::span<const Biarc>(plan.biarcs), a.ds);
    write_trace_csv(csv, rows);
    if (!emit(a.out, csv.str(), stdout_sink, log)) return kExitIo;
    log << "cost " << plan.cost << " plan_ms " << plan.plan_ms << " width " << plan.width << '\n';
    return kExitOk;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& log, std::ostream& stdout_sink) {
    std::optional<Scenario> sc = load(a.scenario, log);
    if (!sc) return kExitIo;
    if (a.seed) sc->params.seed = *a.seed;
    const MetricsReport m = run_scenario(*sc);
    if (!emit(a.out, metrics_json(m, a.include_timing), stdout_sink, log)) return kExitIo;
    log << sc->name << ": " << to_string(m.status) << '\n';
    return m.success ? kExitOk : kExitFailed;
}

int cmd_validate(const ValidateArgs& a, std::ostream& log) {
    if (a.trials == 0) {
        log << "error: --trials must be positive\n";
        return kExitIo;
    }
    const std::optional<Scenario> sc = load(a.scenario, log);
    if (!sc) return kExitIo;
    const std::uint64_t seed = a.seed.value_or(sc->params.seed);
    const kernels::AgreementReport r = kernels::agreement_parallel(seed, a.trials, &sc->hitbox, {});
    log << "trials " << r.trials << " decisive " << r.decisive << " collisions " << r.collisions
        << " disagreements " << r.disagreements << '\n';
    return r.disagreements == 0 ? kExitOk : kExitFailed;
}

int cmd_bench(const BenchArgs& a, std::ostream& log, std::ostream& stdout_sink) {
    std::error_code ec;
    if (!fs::is_directory(a.dir, ec)) {
        log << "error: not a directory: " << a.dir.string() << '\n';
        return kExitIo;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    if (ec) {
        log << "error: " << ec.message() << '\n';
        return kExitIo;
    }
    std::sort(files.begin(), files.end(), [](const fs::path& x, const fs::path& y) {
        return x.filename().string() < y.filename().string();
    });

    std::vector<Scenario> scenarios;
    scenarios.reserve(files.size());
    for (const fs::path& f : files) {
        std::optional<Scenario> sc = load(f, log);
        if (!sc) return kExitIo;
        if (a.seed) sc->params.seed = *a.seed;
        if (sc->name.empty()) sc->name = f.stem().string();
        scenarios.push_back(std::move(*sc));
    }

    std::vector<MetricsReport> reports(scenarios.size());
    const auto n = static_cast<std::ptrdiff_t>(scenarios.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, a.jobs))
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        reports[static_cast<std::size_t>(i)] = run_scenario(scenarios[static_cast<std::size_t>(i)]);
    }

    std::string csv = std::string(kBenchHeader) + "\n";
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        const MetricsReport& m = reports[i];
        csv += scenarios[i].name + ',' + num(m.plan_ms_median) + ',' + num(m.plan_ms_max) + ',' + num(m.path_m) +
               ',' + num(m.time_s) + ',' + num(m.prox_m) + ',' + (m.success ? "1" : "0") + '\n';
        log << scenarios[i].name << ": " << to_string(m.status) << '\n';
    }
    if (!emit(a.out, csv, stdout_sink, log)) return kExitIo;
    return kExitOk;
}

}  // namespace biarc::cli
