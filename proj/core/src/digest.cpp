// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/digest.hpp"

#include <cstdio>
#include <cstring>

namespace manetsim {

void Fnv1a64::add_bytes(const void* data, std::size_t len) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        add_byte(p[i]);
    }
}

void Fnv1a64::add_u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        add_byte(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

void Fnv1a64::add_double(double v) {
    std::uint64_t bits;
    static_assert(sizeof bits == sizeof v);
    std::memcpy(&bits, &v, sizeof bits);
    add_u64(bits);
}

void Fnv1a64::add_string(std::string_view s) {
    add_bytes(s.data(), s.size());
}

std::uint64_t fnv1a64(std::string_view s) {
    Fnv1a64 h;
    h.add_string(s);
    return h.value();
}

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

} // namespace manetsim
