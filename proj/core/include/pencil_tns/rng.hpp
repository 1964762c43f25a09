#pragma once

#include <cstdint>

#include "pencil_tns/rational.hpp"

namespace ptns {

// Counter-based generator: the k-th draw is a pure function of (seed, stream, k).
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : key_(mix(seed ^ mix(stream + 0x51ed27))) {}

    std::uint64_t next() { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }
    // Uniform integer in [lo, hi].
    long long uniform(long long lo, long long hi);
    Rational uniform_rational(long lo, long hi) { return Rational(static_cast<long>(uniform(lo, hi))); }
    // Independent child stream.
    Rng fork(std::uint64_t tag) const { return Rng(key_, tag); }

    static std::uint64_t mix(std::uint64_t z);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace ptns
