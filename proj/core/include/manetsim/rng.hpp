// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_RNG_HPP
#define MANETSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace manetsim {

// Named random stream seeded from (master_seed, label). Identical seed and
// label give an identical draw sequence on every platform: mt19937_64 is
// fully specified by the standard and the int/real mappings below avoid the
// implementation-defined std::*_distribution classes.
//
// Each simulation concern (mobility, traffic, attacker, jitter) owns its own
// stream so that changing one scenario knob never perturbs unrelated draws.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::string_view label);

    std::uint64_t next_u64();

    /// Uniform integer in [lo, hi], both bounds inclusive. lo > hi is a
    /// programming error.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Uniform real in the half-open interval [lo, hi).
    double uniform_real(double lo, double hi);

    const std::string& label() const { return label_; }

private:
    /// Unbiased draw from [0, range) by rejection.
    std::uint64_t bounded(std::uint64_t range);

    std::string label_;
    std::mt19937_64 gen_;
};

} // namespace manetsim

#endif
