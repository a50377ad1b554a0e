// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_METRICS_HPP
#define MANETSIM_METRICS_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "manetsim/packet.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

// Per-run counters feeding the three headline metrics. A "transmission" is
// one node sending or forwarding one packet once; a broadcast reaching many
// receivers is still a single transmission.
class Metrics {
  public:
    void count_tx(const Packet& p) {
        if (is_data(p)) {
            ++data_tx_;
        } else {
            ++control_tx_;
            if (is_alarm(p)) ++alarm_tx_;
        }
    }

    void count_sent(FlowId flow) {
        ++sent_;
        ++flow_sent_[flow];
    }

    void count_delivered(FlowId flow, double delay_s) {
        ++delivered_;
        ++flow_delivered_[flow];
        delay_sum_s_ += delay_s;
    }

    void count_dropped() { ++dropped_; }

    std::uint64_t sent() const { return sent_; }
    std::uint64_t delivered() const { return delivered_; }
    std::uint64_t dropped() const { return dropped_; }
    std::uint64_t control_tx() const { return control_tx_; }
    std::uint64_t alarm_tx() const { return alarm_tx_; }
    std::uint64_t data_tx() const { return data_tx_; }
    double delay_sum_s() const { return delay_sum_s_; }

    /// delivered/sent; 0 when nothing was sent (see pdr_degenerate()).
    double pdr() const { return sent_ == 0 ? 0.0 : double(delivered_) / double(sent_); }
    bool pdr_degenerate() const { return sent_ == 0; }

    /// Mean end-to-end delay over delivered packets; undefined when none.
    std::optional<double> avg_delay_s() const {
        if (delivered_ == 0) return std::nullopt;
        return delay_sum_s_ / double(delivered_);
    }

    /// Control transmissions per delivered data packet; undefined when
    /// nothing was delivered.
    std::optional<double> nro() const {
        if (delivered_ == 0) return std::nullopt;
        return double(control_tx_) / double(delivered_);
    }

    /// Same ratio with alarm traffic taken out of the numerator.
    std::optional<double> nro_excluding_alarms() const {
        if (delivered_ == 0) return std::nullopt;
        return double(control_tx_ - alarm_tx_) / double(delivered_);
    }

    std::uint64_t flow_sent(FlowId flow) const { return lookup(flow_sent_, flow); }
    std::uint64_t flow_delivered(FlowId flow) const { return lookup(flow_delivered_, flow); }
    double flow_pdr(FlowId flow) const {
        const auto s = flow_sent(flow);
        return s == 0 ? 0.0 : double(flow_delivered(flow)) / double(s);
    }
    const std::map<FlowId, std::uint64_t>& flow_sent_counts() const { return flow_sent_; }

  private:
    static std::uint64_t lookup(const std::map<FlowId, std::uint64_t>& m, FlowId f) {
        auto it = m.find(f);
        return it == m.end() ? 0 : it->second;
    }

    std::uint64_t sent_ = 0;
    std::uint64_t delivered_ = 0;
    std::uint64_t dropped_ = 0;
    std::uint64_t control_tx_ = 0;
    std::uint64_t alarm_tx_ = 0;
    std::uint64_t data_tx_ = 0;
    double delay_sum_s_ = 0.0;
    std::map<FlowId, std::uint64_t> flow_sent_;
    std::map<FlowId, std::uint64_t> flow_delivered_;
};

// Anomaly and diagnostic counters that are not part of the metric
// definitions but explain a run (e.g. why packets vanished).
struct RunLog {
    std::uint64_t missing_reverse_route = 0; // RREP arrived but reverse path was gone
    std::uint64_t hop_cap_drops = 0;         // data exceeded the forwarding hop cap
    std::uint64_t blackhole_data_drops = 0;  // data swallowed by a malicious node
    std::uint64_t buffer_overflow_drops = 0; // discovery buffer evictions
    std::uint64_t discovery_failures = 0;    // discoveries that exhausted retries
};

} // namespace manetsim

#endif
