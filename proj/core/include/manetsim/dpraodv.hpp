// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_DPRAODV_HPP
#define MANETSIM_DPRAODV_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "manetsim/packet.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

enum class AlarmScope {
    Flood,     // network-wide with (originator, alarm_id) dedupe
    Neighbors, // one-hop only, no rebroadcast
};

enum class CheckMode {
    Diff,     // compare (reply seq - locally held seq) against the threshold
    Absolute, // compare the raw reply seq against the threshold
};

struct DpraodvParams {
    bool enabled = false;
    double initial_threshold = 10.0;
    double slot_length_s = 5.0;
    AlarmScope alarm_scope = AlarmScope::Flood;
    CheckMode check_mode = CheckMode::Diff;
    // When set, the diff baseline is max(table seq, highest seq this node has
    // observed for the destination in route requests and accepted replies)
    // instead of the table seq alone. Keeps first-contact diffs small so a
    // legitimate destination with a long history is not mistaken for an
    // attacker by a node that merely lacks a table entry.
    bool observed_baseline = true;
};

// Per-node reply-anomaly detector: threshold check on incoming route
// replies, a permanent blacklist, alarm origination/dedup bookkeeping, and
// the per-slot threshold update.
class DpraodvGuard {
  public:
    enum class Verdict {
        Accept,
        Suspect,           // jump above threshold: blacklist + alarm, no table update
        IgnoreBlacklisted, // replier already blacklisted: drop without processing
    };

    explicit DpraodvGuard(DpraodvParams params)
        : params_(params), threshold_(params.initial_threshold) {}

    /// Inspect a reply. table_seq is this node's current entry seq for
    /// rrep.destination (0 when none); diff_out receives the compared value.
    Verdict check(const RrepPacket& rrep, SeqNo table_seq, double& diff_out);

    /// Baseline feed: highest destination seq seen in any route request or
    /// accepted reply. No-op unless observed_baseline is set.
    void note_observed_seq(NodeId dest, SeqNo seq);

    void blacklist_add(NodeId node) { blacklist_.insert(node); }
    bool blacklisted(NodeId node) const { return blacklist_.count(node) != 0; }
    const std::set<NodeId>& blacklist() const { return blacklist_; }

    /// Slot boundary: threshold becomes the mean of the slot's samples when
    /// any exist, else stays. Samples are cleared. True when it changed.
    bool on_slot_boundary();

    double threshold() const { return threshold_; }
    const std::vector<double>& slot_samples() const { return slot_samples_; }

    /// Flood dedupe; true exactly once per (originator, alarm_id).
    bool alarm_is_new(NodeId originator, std::uint64_t alarm_id) {
        return alarm_seen_.insert({originator, alarm_id}).second;
    }

    std::uint64_t next_alarm_id() { return ++own_alarm_counter_; }

    const DpraodvParams& params() const { return params_; }

  private:
    DpraodvParams params_;
    double threshold_;
    std::vector<double> slot_samples_;
    std::set<NodeId> blacklist_;
    std::map<NodeId, SeqNo> observed_seq_;
    std::set<std::pair<NodeId, std::uint64_t>> alarm_seen_;
    std::uint64_t own_alarm_counter_ = 0;
};

} // namespace manetsim

#endif
