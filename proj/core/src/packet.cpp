// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/packet.hpp"

namespace manetsim {

const char* packet_kind_name(const Packet& p) {
    struct Namer {
        const char* operator()(const RreqPacket&) const { return "RREQ"; }
        const char* operator()(const RrepPacket&) const { return "RREP"; }
        const char* operator()(const RerrPacket&) const { return "RERR"; }
        const char* operator()(const DataPacket&) const { return "DATA"; }
        const char* operator()(const AlarmPacket&) const { return "ALARM"; }
    };
    return std::visit(Namer{}, p);
}

} // namespace manetsim
