// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/dpraodv.hpp"

#include <algorithm>
#include <numeric>

namespace manetsim {

DpraodvGuard::Verdict DpraodvGuard::check(const RrepPacket& rrep, SeqNo table_seq,
                                          double& diff_out) {
    if (blacklisted(rrep.replier)) {
        diff_out = 0.0;
        return Verdict::IgnoreBlacklisted;
    }
    SeqNo baseline = table_seq;
    if (params_.observed_baseline) {
        auto it = observed_seq_.find(rrep.destination);
        if (it != observed_seq_.end()) {
            baseline = std::max(baseline, it->second);
        }
    }
    const double compared = params_.check_mode == CheckMode::Absolute
                                ? static_cast<double>(rrep.dest_seq)
                                : static_cast<double>(rrep.dest_seq) -
                                      static_cast<double>(baseline);
    diff_out = compared;
    if (compared > threshold_) {
        return Verdict::Suspect;
    }
    // Only positive advances are threshold evidence. Zero and negative
    // differences come from duplicate or stale replies and carry no
    // destination-freshness signal; averaging them in would drag the
    // threshold to or below zero, where every genuine advance gets flagged
    // (and the threshold's own positivity invariant breaks).
    if (compared > 0.0) {
        slot_samples_.push_back(compared);
    }
    return Verdict::Accept;
}

void DpraodvGuard::note_observed_seq(NodeId dest, SeqNo seq) {
    if (!params_.observed_baseline) return;
    SeqNo& cur = observed_seq_[dest];
    cur = std::max(cur, seq);
}

bool DpraodvGuard::on_slot_boundary() {
    if (slot_samples_.empty()) {
        return false;
    }
    const double sum = std::accumulate(slot_samples_.begin(), slot_samples_.end(), 0.0);
    threshold_ = sum / static_cast<double>(slot_samples_.size());
    slot_samples_.clear();
    return true;
}

} // namespace manetsim
