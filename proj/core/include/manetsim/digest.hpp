// Copyright (c) 2026 the manetsim contributors. Licensed under the Apache
// License, Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#ifndef MANETSIM_DIGEST_HPP
#define MANETSIM_DIGEST_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace manetsim {

// Incremental FNV-1a (64-bit). Used for reproducibility fingerprints:
// feeding the same byte sequence always yields the same value, so two runs
// can be compared without storing full traces.
class Fnv1a64 {
  public:
    void add_byte(std::uint8_t b) {
        value_ ^= b;
        value_ *= 0x100000001b3ull;
    }
    void add_bytes(const void* data, std::size_t len);
    void add_u64(std::uint64_t v);
    void add_double(double v); // hashes the IEEE-754 bit pattern
    void add_string(std::string_view s);

    std::uint64_t value() const { return value_; }

  private:
    std::uint64_t value_ = 0xcbf29ce484222325ull;
};

std::uint64_t fnv1a64(std::string_view s);

// 16 lowercase hex digits, zero padded.
std::string to_hex(std::uint64_t v);

} // namespace manetsim

#endif
