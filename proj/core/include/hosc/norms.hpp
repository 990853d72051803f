#pragma once

#include <span>
#include <string>
#include <vector>

#include "hosc/propagators.hpp"
#include "hosc/quadrature.hpp"
#include "hosc/spectral.hpp"
#include "hosc/types.hpp"

namespace hosc {

// ---- norm selection -------------------------------------------------------

enum class NormKind { Lp, MixedXT, MixedTX, TriebelLizorkin, SobolevH2, SobolevWp };

// Parsed from CLI strings like "Lp:p=2", "TL:r=0.25,p=2,q=2",
// "MixedXT:p=4,q=2,T=6.283185307179586", "SobolevH2:s=2", "SobolevWp:s=1,p=4".
// `inf` is accepted for p and q.
struct NormSpec {
    NormKind kind = NormKind::Lp;
    double p = 2.0;
    double q = 2.0;
    double r = 0.0;  // Triebel-Lizorkin smoothness weight l^r
    double s = 0.0;  // Sobolev power of H
    double T = kTwoPi;

    static NormSpec parse(const std::string& text);
    std::string canonical() const;
    void validate() const;  // throws std::invalid_argument
};

// ---- building blocks -------------------------------------------------------

// (sum_i w_i |v_i|^p)^{1/p}; p = inf gives max_i |v_i|; 0 < p < 1 is computed
// by the same formula (quasi-norm).
double weighted_lp(std::span<const Complex> values, std::span<const double> weights,
                   double p);
double weighted_lp(std::span<const double> values, std::span<const double> weights,
                   double p);

// L^p norm of sampled values over a plain-convention grid.
double lp_norm(std::span<const Complex> values, const QuadratureGrid& grid, double p);

// ---- Triebel-Lizorkin norms -------------------------------------------------

// || ( sum_l l^{rq} |P_l f|^q )^{1/q} ||_{L^p}; q = inf takes the sup over l
// of l^r |P_l f(x)| pointwise.
double tl_norm(const SpectralField& f, double r, double p, double q,
               const QuadratureGrid& grid);

// Same from precomputed eigenspace samples.  `level_scale` (optional)
// multiplies |P_l f(x)| by an extra per-level factor, which evaluates norms
// of m(H)f without re-synthesizing.
double tl_norm_from_levels(const LevelValues& levels, std::span<const double> weights,
                           double r, double p, double q,
                           std::span<const double> level_scale = {});

// ---- exact time-L^2 profile -------------------------------------------------

// g(x) = ||u(., x)||_{L^2_t[0,2pi]} = sqrt(2pi sum_l |P_l f(x)|^2), the
// quadrature-free route for q = 2 mixed norms.
std::vector<double> l2t_profile(const SpectralField& f, const QuadratureGrid& grid);
std::vector<double> l2t_profile_from_levels(const LevelValues& levels);

// ---- mixed space-time norms -------------------------------------------------

// ( integral_x ( integral_t |u|^q dt )^{p/q} dx )^{1/p}.  The time grid must
// resolve the field's frequencies: for periodic grids this requires
// N_t >= 8 * cutoff (ResolutionError otherwise).
double mixed_norm_xt(const SpaceTimeField& u, double p, double q);

// ( integral_t ( integral_x |u|^p dx )^{q/p} dt )^{1/q}.
double mixed_norm_tx(const SpaceTimeField& u, double q, double p);

// ---- Sobolev norms ----------------------------------------------------------

// ||H^{s/2} f||_{L^2} = sqrt( sum_nu lambda_nu^s |c_nu|^2 ), exact.
double sobolev_h_norm(const SpectralField& f, double s);

// ||H^s f||_{L^p} over the given grid.
double sobolev_w_norm(const SpectralField& f, double s, double p,
                      const QuadratureGrid& grid);

// ---- default grids and the one-call facade -----------------------------------

// Compensated Gauss-Hermite grid with the standard margin M = cutoff + 12.
QuadratureGrid default_grid(int dimension, int cutoff);

// Dense uniform grid on [-R, R]^n with R = sqrt(2L) + 4, used for p = inf
// (max over grid) semantics; per-axis counts shrink with dimension to keep
// the point budget flat.
QuadratureGrid sup_grid(int dimension, int cutoff);

// Evaluates any NormSpec on a field, choosing grids per the defaults above.
// Mixed norms evolve under the oscillator group with N_t = 8 * cutoff
// uniform periodic nodes on [0, T]; q = 2 with T = 2pi uses the exact
// profile route.
double field_norm(const SpectralField& f, const NormSpec& spec);

} // namespace hosc
