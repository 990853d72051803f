#pragma once

#include <cstdint>

#include "hosc/types.hpp"

namespace hosc {

// splitmix64 (Steele/Lea/Vigna).  Chosen over <random> engines together with
// a hand-rolled Box-Muller because the standard normal distribution is
// implementation-defined; this generator produces bit-identical streams on
// every platform, which the reproducibility guarantees below rely on.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// Independent per-trial stream: the (seed, trial) pair is hashed into a
// starting state, so trial k draws the same numbers no matter how many other
// trials ran before it or on which thread.
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial);

    // Uniform in [0, 1), 53-bit resolution.
    double uniform();

    // Standard normal via Box-Muller (pairs cached).
    double normal();

    // Independent standard normals in the real and imaginary parts.
    Complex complex_normal();

private:
    SplitMix64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace hosc
