#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "biarc/cli.hpp"

int main(int argc, char** argv) {
    using namespace biarc::cli;

    CLI::App app{"Biarc lattice planner: planning, simulation, oracle validation and benchmarks"};
    app.require_subcommand(1);

    PlanArgs plan;
    auto* plan_cmd = app.add_subcommand("plan", "Plan once from the first waypoint and write a trace CSV");
    plan_cmd->add_option("scenario", plan.scenario, "Scenario JSON file")->required();
    plan_cmd->add_option("--out", plan.out, "Trace CSV path (stdout if omitted)");
    plan_cmd->add_option("--ds", plan.ds, "Trace sample spacing [m]")->capture_default_str();

    SimulateArgs sim;
    std::uint64_t sim_seed = 0;
    bool no_timing = false;
    auto* sim_cmd = app.add_subcommand("simulate", "Run the closed-loop simulation and write a metrics record");
    sim_cmd->add_option("scenario", sim.scenario, "Scenario JSON file")->required();
    sim_cmd->add_option("--out", sim.out, "Metrics JSON path (stdout if omitted)");
    auto* sim_seed_opt = sim_cmd->add_option("--seed", sim_seed, "Override the scenario seed");
    sim_cmd->add_flag("--no-timing", no_timing, "Leave wall-clock fields out of the record");

    ValidateArgs val;
    std::uint64_t val_seed = 0;
    auto* val_cmd = app.add_subcommand("validate", "Compare closed-form collision checks against the sampling oracle");
    val_cmd->add_option("scenario", val.scenario, "Scenario JSON file (supplies the hitbox and seed)")->required();
    val_cmd->add_option("--trials", val.trials, "Number of random cases")->capture_default_str();
    auto* val_seed_opt = val_cmd->add_option("--seed", val_seed, "Override the scenario seed");

    BenchArgs bench;
    std::uint64_t bench_seed = 0;
    auto* bench_cmd = app.add_subcommand("bench", "Simulate every scenario in a directory and write a CSV table");
    bench_cmd->add_option("dir", bench.dir, "Directory of scenario JSON files")->required();
    bench_cmd->add_option("--out", bench.out, "CSV path (stdout if omitted)");
    auto* bench_seed_opt = bench_cmd->add_option("--seed", bench_seed, "Override every scenario seed");
    bench_cmd->add_option("--jobs", bench.jobs, "Scenarios run in parallel")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitIo;
    }

    if (*plan_cmd) return cmd_plan(plan, std::cerr, std::cout);
    if (*sim_cmd) {
        if (*sim_seed_opt) sim.seed = sim_seed;
        sim.include_timing = !no_timing;
        return cmd_simulate(sim, std::cerr, std::cout);
    }
    if (*val_cmd) {
        if (*val_seed_opt) val.seed = val_seed;
        return cmd_validate(val, std::cerr);
    }
    if (*bench_seed_opt) bench.seed = bench_seed;
    return cmd_bench(bench, std::cerr, std::cout);
}
