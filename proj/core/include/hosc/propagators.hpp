#pragma once

#include <span>
#include <vector>

#include "hosc/multiplier.hpp"
#include "hosc/quadrature.hpp"
#include "hosc/spectral.hpp"
#include "hosc/time_grid.hpp"
#include "hosc/types.hpp"

namespace hosc {

// ---- oscillator Schroedinger group e^{-itH} ----------------------------

// Coefficient at level l multiplied by e^{-itl}; 2*pi-periodic in t because
// every level is an integer.
SpectralField schrodinger_H(const SpectralField& f, double t);

// ---- heat semigroup e^{-tH} ---------------------------------------------

// Spectral form: coefficient at level l multiplied by e^{-tl}.  Backward
// heat (t < 0) is rejected: it amplifies truncation noise exponentially.
SpectralField heat_spectral(const SpectralField& f, double t);

// ---- heat kernel (closed form vs spectral sum) --------------------------

// The closed form carries a known exponent ambiguity in its source: the
// symmetric variant uses -(1/2)(|x|^2+|y|^2)coth(2t) + x.y csch(2t), the
// as-printed variant -( (1/2)|x|^2 + |y|^2 )coth(2t) + x.y csch(2t).
// select_heat_kernel_variant decides between them against the spectral-sum
// oracle; callers should use the selected variant.
enum class HeatKernelVariant { Symmetric, AsPrinted };

double heat_kernel(double t, std::span<const double> x, std::span<const double> y,
                   HeatKernelVariant variant = HeatKernelVariant::Symmetric);

// Truncated eigenfunction expansion sum_nu e^{-t(2|nu|+n)} phi_nu(x) phi_nu(y),
// with per-axis degree <= max_degree.  The independent oracle for the closed
// form; absolute truncation error <= ~e^{-2t*max_degree} for t > 0.
double heat_kernel_spectral_sum(double t, std::span<const double> x,
                                std::span<const double> y, int max_degree);

struct HeatKernelSelection {
    HeatKernelVariant variant;
    double symmetric_deviation;  // max |closed - sum| over the probe set
    double printed_deviation;
};

// Probes both closed-form variants against the spectral sum on
// [-3,3]^2 x {t_list} (1-d kernel; the tensor structure extends the verdict
// to every dimension).
HeatKernelSelection select_heat_kernel_variant(std::span<const double> t_list,
                                               int max_degree = 60);

// v(z_k) = sum_i w_i K_t(z_k, x_i) f(x_i) on a plain-convention grid.
std::vector<Complex> heat_kernel_apply(std::span<const Complex> samples,
                                       const QuadratureGrid& grid, double t,
                                       std::span<const double> points,
                                       HeatKernelVariant variant = HeatKernelVariant::Symmetric);

// ---- free propagator e^{it Delta} ---------------------------------------

struct FreeEvolutionOptions {
    // Largest |t| accepted; the default is the lens-substitution image of
    // 98% of the quarter period, tan((pi/2)*0.98)/2.
    double horizon = 15.9101476301944405;
    // Order-doubling certification threshold (sup-relative).
    double tolerance = 1e-6;
    // Oscillation oversampling factor for the uniform-grid fallback.
    int oversample = 3;
};

struct FreeEvolutionResult {
    std::vector<Complex> values;
    double certified_error = 0.0;  // order-doubling discrepancy, sup-relative
    int axis_nodes = 0;            // final per-axis quadrature size
    bool used_uniform = false;     // uniform fallback vs Gauss-Hermite
};

// e^{it Delta} f at flattened points via the Fourier eigenrelation
//
//   e^{it Delta} f(x) = (2pi)^{-n/2} integral e^{i x.xi - i t |xi|^2}
//                       sum_nu (-i)^{|nu|} c_nu phi_nu(xi) d xi,
//
// which tensorizes into per-axis oscillatory integrals against psi_k.
// Quadrature: compensated Gauss-Hermite while the oscillation-scaled order
// fits under the Gauss-Hermite cap, otherwise a uniform grid on
// [-R, R] with R = sqrt(2L)+4 and spacing tied to the peak phase frequency.
// Every call self-validates by order doubling; failure to certify within
// options.tolerance raises ResolutionError, as does |t| beyond the horizon.
FreeEvolutionResult free_schrodinger(const SpectralField& f, double t,
                                     std::span<const double> points,
                                     const FreeEvolutionOptions& options = {});

// ---- sampled evolution --------------------------------------------------

// u(t_j, x_i) for the oscillator group, time-major storage.
struct SpaceTimeField {
    SpectralField initial;
    TimeGrid time;
    QuadratureGrid space;
    std::vector<Complex> values;  // values[j * space.size() + i]

    std::span<const Complex> at_time(std::size_t j) const {
        return {values.data() + j * space.size(), space.size()};
    }
};

SpaceTimeField evolve_oscillator(const SpectralField& f, const TimeGrid& time,
                                 const QuadratureGrid& space);

// Same evolution from precomputed eigenspace samples (one synthesis pass
// shared across many time nodes or exponent choices).
std::vector<Complex> oscillator_values(const LevelValues& levels,
                                       std::span<const double> times);

} // namespace hosc
