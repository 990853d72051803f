#include "hosc/rng.hpp"

#include <cmath>

namespace hosc {

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial) {
    // Two scrambling rounds separate the seed and trial contributions so that
    // nearby (seed, trial) pairs land in unrelated states.
    SplitMix64 mixer{seed};
    const std::uint64_t a = mixer.next();
    mixer.state = a ^ (trial * 0x9e3779b97f4a7c15ULL);
    gen_.state = mixer.next();
}

double TrialRng::uniform() {
    return static_cast<double>(gen_.next() >> 11) * 0x1.0p-53;
}

double TrialRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double angle = kTwoPi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex TrialRng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

} // namespace hosc
