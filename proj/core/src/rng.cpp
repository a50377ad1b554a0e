// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#include "manetsim/rng.hpp"

#include <stdexcept>

#include "manetsim/digest.hpp"

namespace manetsim {

RandomStream::RandomStream(std::uint64_t master_seed, std::string_view label)
    : label_(label) {
    const std::uint64_t lh = fnv1a64(label);
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_seed),
        static_cast<std::uint32_t>(master_seed >> 32),
        static_cast<std::uint32_t>(lh),
        static_cast<std::uint32_t>(lh >> 32),
    };
    gen_.seed(seq);
}

std::uint64_t RandomStream::next_u64() {
    return gen_();
}

std::uint64_t RandomStream::bounded(std::uint64_t range) {
    // Reject the biased low region so every residue is equally likely.
    const std::uint64_t threshold = (0 - range) % range;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) {
            return r % range;
        }
    }
}

std::int64_t RandomStream::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::logic_error("RandomStream::uniform_int: lo > hi on stream '" + label_ + "'");
    }
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) { // full 64-bit span
        return static_cast<std::int64_t>(next_u64());
    }
    return lo + static_cast<std::int64_t>(bounded(range));
}

double RandomStream::uniform_real(double lo, double hi) {
    // 53 uniform mantissa bits -> u in [0, 1).
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

} // namespace manetsim
