// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "manetsim/digest.hpp"

namespace manetsim {

const char* mode_name(ProtocolMode mode) {
    switch (mode) {
        case ProtocolMode::Aodv: return "aodv";
        case ProtocolMode::AodvAttacked: return "aodv_attacked";
        case ProtocolMode::Dpraodv: return "dpraodv";
    }
    return "?";
}

std::optional<ProtocolMode> parse_mode(std::string_view text) {
    if (text == "aodv") return ProtocolMode::Aodv;
    if (text == "aodv_attacked") return ProtocolMode::AodvAttacked;
    if (text == "dpraodv") return ProtocolMode::Dpraodv;
    return std::nullopt;
}

bool ScenarioConfig::is_malicious(NodeId n) const {
    return std::find(malicious_nodes.begin(), malicious_nodes.end(), n) !=
           malicious_nodes.end();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void fail(const std::string& key, const std::string& detail) {
    throw ScenarioError("scenario key '" + key + "': " + detail);
}

double to_double(const std::string& key, std::string_view value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        fail(key, "invalid number '" + std::string(value) + "'");
    }
    return out;
}

std::uint64_t to_u64(const std::string& key, std::string_view value) {
    std::uint64_t out = 0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        fail(key, "invalid non-negative integer '" + std::string(value) + "'");
    }
    return out;
}

std::uint32_t to_u32(const std::string& key, std::string_view value) {
    const std::uint64_t v = to_u64(key, value);
    if (v > 0xffffffffull) {
        fail(key, "value out of range");
    }
    return static_cast<std::uint32_t>(v);
}

bool to_bool(const std::string& key, std::string_view value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    fail(key, "expected true or false, got '" + std::string(value) + "'");
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

ScenarioConfig parse_scenario(std::string_view text) {
    ScenarioConfig cfg;
    std::set<std::string> seen;
    bool saw_flow = false;
    bool saw_n_sources = false;

    using Setter = std::function<void(const std::string&, std::string_view)>;
    const std::map<std::string, Setter> setters = {
        {"node_count", [&](const std::string& k, std::string_view v) { cfg.node_count = to_u32(k, v); }},
        {"sim_time_s", [&](const std::string& k, std::string_view v) { cfg.sim_time_s = to_double(k, v); }},
        {"master_seed", [&](const std::string& k, std::string_view v) { cfg.master_seed = to_u64(k, v); }},
        {"protocol_mode",
         [&](const std::string& k, std::string_view v) {
             auto m = parse_mode(v);
             if (!m) fail(k, "expected aodv | aodv_attacked | dpraodv, got '" + std::string(v) + "'");
             cfg.mode = *m;
         }},
        {"terrain_width_m", [&](const std::string& k, std::string_view v) { cfg.mobility.terrain_width_m = to_double(k, v); }},
        {"terrain_height_m", [&](const std::string& k, std::string_view v) { cfg.mobility.terrain_height_m = to_double(k, v); }},
        {"pause_time_s", [&](const std::string& k, std::string_view v) { cfg.mobility.pause_time_s = to_double(k, v); }},
        {"max_speed_mps", [&](const std::string& k, std::string_view v) { cfg.mobility.max_speed_mps = to_double(k, v); }},
        {"min_speed_mps", [&](const std::string& k, std::string_view v) { cfg.mobility.min_speed_mps = to_double(k, v); }},
        {"tx_range_m", [&](const std::string& k, std::string_view v) { cfg.radio.tx_range_m = to_double(k, v); }},
        {"per_hop_latency_s", [&](const std::string& k, std::string_view v) { cfg.radio.per_hop_latency_s = to_double(k, v); }},
        {"route_lifetime_s", [&](const std::string& k, std::string_view v) { cfg.aodv.route_lifetime_s = to_double(k, v); }},
        {"discovery_timeout_s", [&](const std::string& k, std::string_view v) { cfg.aodv.discovery_timeout_s = to_double(k, v); }},
        {"discovery_retries", [&](const std::string& k, std::string_view v) { cfg.aodv.discovery_retries = to_u32(k, v); }},
        {"buffer_cap", [&](const std::string& k, std::string_view v) { cfg.aodv.buffer_cap = to_u64(k, v); }},
        {"malicious_nodes",
         [&](const std::string& k, std::string_view v) {
             cfg.malicious_nodes.clear();
             for (auto tok : split_ws(v)) cfg.malicious_nodes.push_back(to_u32(k, tok));
         }},
        {"seq_offset_lo", [&](const std::string& k, std::string_view v) { cfg.blackhole.seq_offset_lo = to_u32(k, v); }},
        {"seq_offset_hi", [&](const std::string& k, std::string_view v) { cfg.blackhole.seq_offset_hi = to_u32(k, v); }},
        {"reply_hop_count", [&](const std::string& k, std::string_view v) { cfg.blackhole.reply_hop_count = to_u32(k, v); }},
        {"dpraodv_enabled", [&](const std::string& k, std::string_view v) { cfg.dpraodv_enabled = to_bool(k, v); }},
        {"initial_threshold", [&](const std::string& k, std::string_view v) { cfg.dpraodv.initial_threshold = to_double(k, v); }},
        {"slot_length_s", [&](const std::string& k, std::string_view v) { cfg.dpraodv.slot_length_s = to_double(k, v); }},
        {"alarm_scope",
         [&](const std::string& k, std::string_view v) {
             if (v == "flood") cfg.dpraodv.alarm_scope = AlarmScope::Flood;
             else if (v == "neighbors") cfg.dpraodv.alarm_scope = AlarmScope::Neighbors;
             else fail(k, "expected flood | neighbors, got '" + std::string(v) + "'");
         }},
        {"check_mode",
         [&](const std::string& k, std::string_view v) {
             if (v == "diff") cfg.dpraodv.check_mode = CheckMode::Diff;
             else if (v == "absolute") cfg.dpraodv.check_mode = CheckMode::Absolute;
             else fail(k, "expected diff | absolute, got '" + std::string(v) + "'");
         }},
        {"n_sources",
         [&](const std::string& k, std::string_view v) {
             cfg.n_sources = to_u32(k, v);
             saw_n_sources = true;
         }},
        {"cbr_interval_s", [&](const std::string& k, std::string_view v) { cfg.cbr_interval_s = to_double(k, v); }},
        {"cbr_packet_bytes", [&](const std::string& k, std::string_view v) { cfg.cbr_packet_bytes = to_u32(k, v); }},
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ScenarioError("scenario line " + std::to_string(line_no) +
                                ": expected key = value");
        }
        const std::string key{trim(line.substr(0, eq))};
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "flow") {
            const auto fields = split_ws(value);
            if (fields.size() != 6) {
                fail(key, "expected 6 fields: src dst start stop interval bytes");
            }
            CbrFlow f;
            f.id = static_cast<FlowId>(cfg.explicit_flows.size());
            f.src = to_u32(key, fields[0]);
            f.dst = to_u32(key, fields[1]);
            f.start = to_double(key, fields[2]);
            f.stop = to_double(key, fields[3]);
            f.interval_s = to_double(key, fields[4]);
            f.packet_bytes = to_u32(key, fields[5]);
            cfg.explicit_flows.push_back(f);
            saw_flow = true;
            continue;
        }

        auto it = setters.find(key);
        if (it == setters.end()) {
            throw ScenarioError("scenario line " + std::to_string(line_no) + ": unknown key '" +
                                key + "'");
        }
        if (!seen.insert(key).second) {
            fail(key, "specified more than once");
        }
        it->second(key, value);
    }

    if (saw_flow && saw_n_sources) {
        throw ScenarioError("scenario keys 'flow' and 'n_sources' are mutually exclusive");
    }
    validate_scenario(cfg);
    return cfg;
}

void validate_scenario(const ScenarioConfig& cfg) {
    if (cfg.node_count < 2) {
        throw ScenarioError("node_count must be >= 2 (got " + std::to_string(cfg.node_count) +
                            ")");
    }
    if (!(cfg.sim_time_s > 0.0)) throw ScenarioError("sim_time_s must be positive");
    if (!(cfg.mobility.terrain_width_m > 0.0) || !(cfg.mobility.terrain_height_m > 0.0)) {
        throw ScenarioError("terrain dimensions must be positive");
    }
    if (cfg.mobility.pause_time_s < 0.0) throw ScenarioError("pause_time_s must be >= 0");
    if (cfg.mobility.max_speed_mps < 0.0) throw ScenarioError("max_speed_mps must be >= 0");
    if (cfg.mobility.max_speed_mps > 0.0) {
        if (!(cfg.mobility.min_speed_mps > 0.0) ||
            cfg.mobility.min_speed_mps > cfg.mobility.max_speed_mps) {
            throw ScenarioError("min_speed_mps must be in (0, max_speed_mps]");
        }
    }
    if (!(cfg.radio.tx_range_m > 0.0)) throw ScenarioError("tx_range_m must be positive");
    if (!(cfg.radio.per_hop_latency_s > 0.0)) {
        throw ScenarioError("per_hop_latency_s must be positive");
    }
    if (!(cfg.aodv.route_lifetime_s > 0.0)) throw ScenarioError("route_lifetime_s must be positive");
    if (!(cfg.aodv.discovery_timeout_s > 0.0)) {
        throw ScenarioError("discovery_timeout_s must be positive");
    }
    if (cfg.aodv.buffer_cap < 1) throw ScenarioError("buffer_cap must be >= 1");
    if (cfg.blackhole.seq_offset_lo > cfg.blackhole.seq_offset_hi) {
        throw ScenarioError("seq_offset_lo must be <= seq_offset_hi");
    }
    if (!(cfg.dpraodv.initial_threshold > 0.0)) {
        throw ScenarioError("initial_threshold must be positive");
    }
    if (!(cfg.dpraodv.slot_length_s > 0.0)) throw ScenarioError("slot_length_s must be positive");

    for (NodeId m : cfg.malicious_nodes) {
        if (m >= cfg.node_count) {
            throw ScenarioError("malicious_nodes entry " + std::to_string(m) +
                                " is not a valid node (node_count " +
                                std::to_string(cfg.node_count) + ")");
        }
    }

    for (const CbrFlow& f : cfg.explicit_flows) {
        if (f.src >= cfg.node_count || f.dst >= cfg.node_count) {
            throw ScenarioError("flow endpoint out of range (node_count " +
                                std::to_string(cfg.node_count) + ")");
        }
        if (cfg.is_malicious(f.src) || cfg.is_malicious(f.dst)) {
            throw ScenarioError("flow endpoint " +
                                std::to_string(cfg.is_malicious(f.src) ? f.src : f.dst) +
                                " is a malicious node");
        }
        if (!(f.interval_s > 0.0)) throw ScenarioError("flow interval must be positive");
        if (!(f.start < f.stop)) throw ScenarioError("flow start must be before stop");
    }

    if (cfg.explicit_flows.empty() && cfg.n_sources >= 1) {
        std::size_t honest = 0;
        for (NodeId n = 0; n < cfg.node_count; ++n) {
            if (!cfg.is_malicious(n)) ++honest;
        }
        if (honest < 2) {
            throw ScenarioError("n_sources requires at least two non-malicious nodes");
        }
    }

    if (cfg.pinned_positions) {
        if (cfg.pinned_positions->size() != cfg.node_count) {
            throw ScenarioError("pinned positions must cover every node");
        }
        for (const Position& p : *cfg.pinned_positions) {
            if (p.x < 0.0 || p.x > cfg.mobility.terrain_width_m || p.y < 0.0 ||
                p.y > cfg.mobility.terrain_height_m) {
                throw ScenarioError("pinned position outside the terrain");
            }
        }
    }
    for (const ScriptedLeg& leg : cfg.scripted_legs) {
        if (leg.node >= cfg.node_count) throw ScenarioError("scripted leg for invalid node");
        if (!(leg.speed > 0.0)) throw ScenarioError("scripted leg speed must be positive");
        if (cfg.mobility.max_speed_mps != 0.0) {
            throw ScenarioError("scripted legs require max_speed_mps = 0");
        }
    }
}

std::string canonical_text(const ScenarioConfig& c) {
    std::string out;
    auto kv = [&out](const char* key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    kv("node_count", std::to_string(c.node_count));
    kv("sim_time_s", fmt_double(c.sim_time_s));
    kv("master_seed", std::to_string(c.master_seed));
    kv("protocol_mode", mode_name(c.mode));
    kv("terrain_width_m", fmt_double(c.mobility.terrain_width_m));
    kv("terrain_height_m", fmt_double(c.mobility.terrain_height_m));
    kv("pause_time_s", fmt_double(c.mobility.pause_time_s));
    kv("max_speed_mps", fmt_double(c.mobility.max_speed_mps));
    kv("min_speed_mps", fmt_double(c.mobility.min_speed_mps));
    kv("tx_range_m", fmt_double(c.radio.tx_range_m));
    kv("per_hop_latency_s", fmt_double(c.radio.per_hop_latency_s));
    kv("route_lifetime_s", fmt_double(c.aodv.route_lifetime_s));
    kv("discovery_timeout_s", fmt_double(c.aodv.discovery_timeout_s));
    kv("discovery_retries", std::to_string(c.aodv.discovery_retries));
    kv("buffer_cap", std::to_string(c.aodv.buffer_cap));
    kv("conditional_seq_bump", c.aodv.conditional_seq_bump ? "true" : "false");
    kv("hop_cap_factor", std::to_string(c.aodv.hop_cap_factor));
    {
        std::string nodes;
        for (NodeId m : c.malicious_nodes) {
            if (!nodes.empty()) nodes += ' ';
            nodes += std::to_string(m);
        }
        kv("malicious_nodes", nodes);
    }
    kv("seq_offset_lo", std::to_string(c.blackhole.seq_offset_lo));
    kv("seq_offset_hi", std::to_string(c.blackhole.seq_offset_hi));
    kv("reply_hop_count", std::to_string(c.blackhole.reply_hop_count));
    kv("dpraodv_enabled", c.detection_enabled() ? "true" : "false");
    kv("initial_threshold", fmt_double(c.dpraodv.initial_threshold));
    kv("slot_length_s", fmt_double(c.dpraodv.slot_length_s));
    kv("alarm_scope", c.dpraodv.alarm_scope == AlarmScope::Flood ? "flood" : "neighbors");
    kv("check_mode", c.dpraodv.check_mode == CheckMode::Diff ? "diff" : "absolute");
    kv("observed_baseline", c.dpraodv.observed_baseline ? "true" : "false");
    kv("n_sources", std::to_string(c.n_sources));
    kv("cbr_interval_s", fmt_double(c.cbr_interval_s));
    kv("cbr_packet_bytes", std::to_string(c.cbr_packet_bytes));
    for (const CbrFlow& f : c.explicit_flows) {
        kv("flow", std::to_string(f.src) + ' ' + std::to_string(f.dst) + ' ' +
                       fmt_double(f.start) + ' ' + fmt_double(f.stop) + ' ' +
                       fmt_double(f.interval_s) + ' ' + std::to_string(f.packet_bytes));
    }
    if (c.pinned_positions) {
        std::string ps;
        for (const Position& p : *c.pinned_positions) {
            if (!ps.empty()) ps += ' ';
            ps += fmt_double(p.x) + ' ' + fmt_double(p.y);
        }
        kv("positions", ps);
    }
    for (const ScriptedLeg& leg : c.scripted_legs) {
        kv("scripted_leg", std::to_string(leg.node) + ' ' + fmt_double(leg.to.x) + ' ' +
                               fmt_double(leg.to.y) + ' ' + fmt_double(leg.speed) + ' ' +
                               fmt_double(leg.depart));
    }
    return out;
}

std::uint64_t config_digest(const ScenarioConfig& config) {
    return fnv1a64(canonical_text(config));
}

} // namespace manetsim
