#pragma once

#include <cstdint>
#include <string>

#include "hosc/spectral.hpp"

namespace hosc {

enum class TrialKind {
    SingleEigenfunction,  // unit coefficient, walking through the basis
    RandomBandLimited,    // iid complex (or real) standard normals, L^2-normalized
    Gaussian,             // the ground state phi_0
    GaussianPerturbed,    // phi_0 plus a small random band-limited bump
};

TrialKind trial_kind_from_string(const std::string& name);
std::string to_string(TrialKind kind);

// Deterministic generator of trial fields.  Trial k reads an RNG stream
// derived from (seed, k) alone, so draws are reproducible bit-for-bit and
// independent of evaluation order or thread count.  Because the coefficient
// layout is level-major, the draw at a larger cutoff extends the draw at a
// smaller one: trial k at cutoffs L < L' shares its first |basis(L)| raw
// normals, which keeps cutoff sweeps comparable trial by trial.
struct TrialFamily {
    TrialKind kind = TrialKind::RandomBandLimited;
    int dimension = 1;
    int cutoff = 20;
    std::uint64_t seed = 42;
    bool real_coefficients = false;

    SpectralField draw(int trial) const;
    SpectralField draw_at_cutoff(int trial, int cutoff_override) const;
};

} // namespace hosc
