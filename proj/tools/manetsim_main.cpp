// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
//
// Command line front end: `run` executes one scenario file, `sweep` runs a
// value/seed/mode grid and writes the CSV, `oracle` runs the built-in
// hand-checked topologies.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "manetsim/digest.hpp"
#include "manetsim/experiment.hpp"
#include "manetsim/oracles.hpp"
#include "manetsim/scenario.hpp"

namespace {

using namespace manetsim;

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScenarioError("cannot read scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ProtocolMode mode_from_flag(const std::string& text) {
    auto m = parse_mode(text);
    if (!m) throw ScenarioError("unknown mode '" + text + "' (aodv, aodv_attacked, dpraodv)");
    return *m;
}

std::string cell(const std::optional<double>& v) {
    if (!v) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return buf;
}

void print_record(const RunRecord& r) {
    char pdr[32];
    std::snprintf(pdr, sizeof pdr, "%.6f", r.report.pdr);
    std::cout << "mode " << mode_name(r.mode) << "  seed " << r.seed << '\n'
              << "pdr " << pdr << (r.report.pdr_degenerate ? " (nothing sent)" : "")
              << "  sent " << r.report.sent << "  delivered " << r.report.delivered << '\n'
              << "avg_delay_s " << cell(r.report.avg_delay_s) << "  nro "
              << cell(r.report.nro) << "  control_tx " << r.report.control_tx
              << "  data_tx " << r.report.data_tx << "  alarm_tx " << r.report.alarm_tx
              << '\n'
              << "config_digest " << to_hex(r.config_digest) << "  trajectory_digest "
              << to_hex(r.trajectory_digest) << '\n'
              << "events " << r.dispatched_events << "  wall_s ";
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_seconds);
    std::cout << wall << '\n';
}

void write_records(const std::vector<RunRecord>& records, const std::string& out_path) {
    if (out_path.empty()) {
        emit_csv(records, std::cout);
        return;
    }
    std::string error;
    if (!emit_csv_file(records, out_path, error)) throw ScenarioError(error);
    std::cerr << "wrote " << records.size() << " rows to " << out_path << '\n';
}

int run_command(const std::string& config_path, const std::string& mode_flag,
                std::uint64_t seed, bool seed_set, const std::string& out_path) {
    ScenarioConfig cfg =
        config_path.empty() ? ScenarioConfig{} : parse_scenario(load_file(config_path));
    if (!mode_flag.empty()) cfg.mode = mode_from_flag(mode_flag);
    if (seed_set) cfg.master_seed = seed;
    validate_scenario(cfg);

    RunRecord rec = run_experiment(cfg);
    print_record(rec);
    if (!out_path.empty()) write_records({rec}, out_path);
    return 0;
}

int sweep_command(const std::string& config_path, const std::string& axis_flag,
                  const std::vector<double>& values, const std::vector<std::uint64_t>& seeds,
                  const std::vector<std::string>& mode_flags, const std::string& out_path) {
    ScenarioConfig base =
        config_path.empty() ? ScenarioConfig{} : parse_scenario(load_file(config_path));

    SweepSpec spec;
    auto axis = parse_axis(axis_flag);
    if (!axis) {
        throw ScenarioError("unknown axis '" + axis_flag +
                            "' (network_size, traffic_load, mobility)");
    }
    spec.axis = *axis;
    spec.values = values;
    spec.seeds = seeds;
    if (!mode_flags.empty()) {
        spec.modes.clear();
        for (const std::string& m : mode_flags) spec.modes.push_back(mode_from_flag(m));
    }

    write_records(run_sweep(spec, base), out_path);
    return 0;
}

int oracle_command(const std::string& name, const std::string& mode_flag,
                   std::uint64_t seed, bool seed_set) {
    if (name.empty()) {
        for (const OracleScenario& o : oracle_scenarios()) {
            std::cout << o.name << "  " << o.summary << '\n';
        }
        return 0;
    }
    const OracleScenario* o = find_oracle(name);
    if (!o) throw ScenarioError("no oracle named '" + name + "' (run `oracle` to list)");

    ScenarioConfig cfg = o->config;
    if (!mode_flag.empty()) cfg.mode = mode_from_flag(mode_flag);
    if (seed_set) cfg.master_seed = seed;
    validate_scenario(cfg);
    std::cout << o->name << ": " << o->summary << '\n';
    print_record(run_experiment(cfg));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic AODV / blackhole / DPRAODV network simulator"};
    app.require_subcommand(1);

    std::string config_path, mode_flag, out_path, oracle_name, axis_flag;
    std::uint64_t seed = 0;
    std::vector<double> values;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> mode_flags;

    CLI::App* run = app.add_subcommand("run", "execute one scenario");
    run->add_option("--config", config_path, "scenario file (defaults apply when omitted)");
    run->add_option("--mode", mode_flag, "aodv | aodv_attacked | dpraodv");
    CLI::Option* run_seed = run->add_option("--seed", seed, "master seed override");
    run->add_option("--out", out_path, "also write the run as a one-row CSV");

    CLI::App* sweep = app.add_subcommand("sweep", "run a value/seed/mode grid, emit CSV");
    sweep->add_option("--config", config_path, "base scenario file");
    sweep->add_option("--axis", axis_flag, "network_size | traffic_load | mobility")
        ->required();
    sweep->add_option("--values", values, "axis coordinates")->required()->delimiter(',');
    sweep->add_option("--seeds", seeds, "master seeds")->required()->delimiter(',');
    sweep->add_option("--modes", mode_flags, "subset of modes (default: all three)")
        ->delimiter(',');
    sweep->add_option("--out", out_path, "CSV path (stdout when omitted)");

    CLI::App* oracle = app.add_subcommand("oracle", "run a built-in checked topology");
    oracle->add_option("name", oracle_name, "oracle name; omit to list them");
    oracle->add_option("--mode", mode_flag, "protocol mode override");
    CLI::Option* oracle_seed = oracle->add_option("--seed", seed, "master seed override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return run_command(config_path, mode_flag, seed, run_seed->count() > 0, out_path);
        }
        if (sweep->parsed()) {
            return sweep_command(config_path, axis_flag, values, seeds, mode_flags, out_path);
        }
        return oracle_command(oracle_name, mode_flag, seed, oracle_seed->count() > 0);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
