// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "manetsim/simulation.hpp"

namespace manetsim {

RunRecord run_experiment(const ScenarioConfig& config, TraceSink* trace) {
    const auto t0 = std::chrono::steady_clock::now();
    Simulation sim(config, trace);
    sim.run();
    const auto t1 = std::chrono::steady_clock::now();

    const Metrics& m = sim.metrics();
    RunRecord rec;
    rec.seed = config.master_seed;
    rec.mode = config.mode;
    rec.report.pdr = m.pdr();
    rec.report.pdr_degenerate = m.pdr_degenerate();
    rec.report.avg_delay_s = m.avg_delay_s();
    rec.report.nro = m.nro();
    rec.report.nro_excluding_alarms = m.nro_excluding_alarms();
    rec.report.sent = m.sent();
    rec.report.delivered = m.delivered();
    rec.report.control_tx = m.control_tx();
    rec.report.data_tx = m.data_tx();
    rec.report.alarm_tx = m.alarm_tx();
    rec.config_digest = config_digest(config);
    rec.trajectory_digest = sim.trajectory_digest();
    rec.dispatched_events = sim.engine().dispatched_total();
    rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    return rec;
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::NetworkSize: return "network_size";
        case SweepAxis::TrafficLoad: return "traffic_load";
        case SweepAxis::Mobility: return "mobility";
    }
    return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view text) {
    if (text == "network_size") return SweepAxis::NetworkSize;
    if (text == "traffic_load") return SweepAxis::TrafficLoad;
    if (text == "mobility") return SweepAxis::Mobility;
    return std::nullopt;
}

ScenarioConfig apply_axis(SweepAxis axis, double value, ScenarioConfig base) {
    switch (axis) {
        case SweepAxis::NetworkSize:
            base.node_count = static_cast<std::uint32_t>(value);
            break;
        case SweepAxis::TrafficLoad:
            base.n_sources = static_cast<std::uint32_t>(value);
            break;
        case SweepAxis::Mobility:
            base.mobility.max_speed_mps = value;
            break;
    }
    return base;
}

namespace {

std::size_t worker_count(std::size_t jobs) {
    std::size_t n = 0;
    if (const char* env = std::getenv("MANETSIM_WORKERS")) {
        n = static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
    }
    if (n == 0) {
        n = std::thread::hardware_concurrency();
    }
    if (n == 0) n = 1;
    return std::min(n, jobs);
}

} // namespace

std::vector<RunRecord> run_sweep(const SweepSpec& spec, const ScenarioConfig& base) {
    if (spec.values.empty() || spec.seeds.empty() || spec.modes.empty()) {
        throw ScenarioError("sweep needs at least one value, one seed and one mode");
    }

    struct Job {
        std::string axis_value;
        ScenarioConfig config;
    };
    std::vector<Job> jobs;
    jobs.reserve(spec.values.size() * spec.seeds.size() * spec.modes.size());
    for (double value : spec.values) {
        for (std::uint64_t seed : spec.seeds) {
            for (ProtocolMode mode : spec.modes) {
                ScenarioConfig cfg = apply_axis(spec.axis, value, base);
                cfg.master_seed = seed;
                cfg.mode = mode;
                validate_scenario(cfg); // fail fast, before any run starts
                jobs.push_back({format_axis_value(value), std::move(cfg)});
            }
        }
    }

    std::vector<RunRecord> records(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            records[i] = run_experiment(jobs[i].config);
            records[i].axis_value = jobs[i].axis_value;
        }
    };

    const std::size_t workers = worker_count(jobs.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return records;
}

std::string format_axis_value(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

namespace {

std::string ratio_cell(const std::optional<double>& v) {
    if (!v) return "NA";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", *v);
    return buf;
}

} // namespace

void emit_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << "axis_value,seed,mode,pdr,avg_delay_s,nro,sent,delivered,control_tx\n";
    char buf[64];
    for (const RunRecord& r : records) {
        out << r.axis_value << ',' << r.seed << ',' << mode_name(r.mode) << ',';
        std::snprintf(buf, sizeof buf, "%.6f", r.report.pdr);
        out << buf << ',' << ratio_cell(r.report.avg_delay_s) << ','
            << ratio_cell(r.report.nro) << ',' << r.report.sent << ',' << r.report.delivered
            << ',' << r.report.control_tx << '\n';
    }
}

bool emit_csv_file(const std::vector<RunRecord>& records, const std::string& path,
                   std::string& error) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        error = "cannot open '" + path + "' for writing";
        return false;
    }
    emit_csv(records, out);
    out.flush();
    if (!out) {
        error = "write to '" + path + "' failed";
        return false;
    }
    return true;
}

} // namespace manetsim
