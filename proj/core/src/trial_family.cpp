#include "hosc/trial_family.hpp"

#include <stdexcept>

#include "hosc/rng.hpp"

namespace hosc {

TrialKind trial_kind_from_string(const std::string& name) {
    if (name == "single-eigenfunction") return TrialKind::SingleEigenfunction;
    if (name == "random-band-limited") return TrialKind::RandomBandLimited;
    if (name == "gaussian") return TrialKind::Gaussian;
    if (name == "gaussian-perturbed") return TrialKind::GaussianPerturbed;
    throw std::invalid_argument("unknown trial family '" + name + "'");
}

std::string to_string(TrialKind kind) {
    switch (kind) {
        case TrialKind::SingleEigenfunction: return "single-eigenfunction";
        case TrialKind::RandomBandLimited: return "random-band-limited";
        case TrialKind::Gaussian: return "gaussian";
        case TrialKind::GaussianPerturbed: return "gaussian-perturbed";
    }
    return "?";
}

namespace {

void normalize(SpectralField& f) {
    const double norm = coefficient_l2(f);
    if (norm == 0.0) return;
    for (Complex& c : f.coefficients) c /= norm;
}

SpectralField random_field(int dimension, int cutoff, std::uint64_t seed, int trial,
                           bool real_coefficients) {
    SpectralField f = zero_field(dimension, cutoff);
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    for (Complex& c : f.coefficients) {
        // Draw both normals even in real mode so the stream position per
        // coefficient is mode-independent.
        const Complex g = rng.complex_normal();
        c = real_coefficients ? Complex{g.real(), 0.0} : g;
    }
    normalize(f);
    return f;
}

} // namespace

SpectralField TrialFamily::draw_at_cutoff(int trial, int cutoff_override) const {
    const auto& basis = basis_for(cutoff_override, dimension);
    switch (kind) {
        case TrialKind::SingleEigenfunction: {
            if (basis.empty()) throw std::invalid_argument("empty basis");
            const MultiIndex& nu = basis[static_cast<std::size_t>(trial) % basis.size()];
            return unit_field(dimension, cutoff_override, nu);
        }
        case TrialKind::RandomBandLimited:
            return random_field(dimension, cutoff_override, seed, trial,
                                real_coefficients);
        case TrialKind::Gaussian: {
            SpectralField f = zero_field(dimension, cutoff_override);
            if (f.coefficients.empty()) throw std::invalid_argument("empty basis");
            f.coefficients[0] = Complex{1.0, 0.0};
            return f;
        }
        case TrialKind::GaussianPerturbed: {
            SpectralField f =
                random_field(dimension, cutoff_override, seed, trial, real_coefficients);
            for (Complex& c : f.coefficients) c *= 0.1;
            f.coefficients[0] += Complex{1.0, 0.0};
            normalize(f);
            return f;
        }
    }
    throw std::logic_error("unreachable trial kind");
}

SpectralField TrialFamily::draw(int trial) const {
    return draw_at_cutoff(trial, cutoff);
}

} // namespace hosc
