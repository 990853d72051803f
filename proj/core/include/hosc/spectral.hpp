#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hosc/multi_index.hpp"
#include "hosc/quadrature.hpp"
#include "hosc/types.hpp"

namespace hosc {

// A band-limited function represented by its Hermite coefficients
// c_nu = <f, phi_nu> for every multi-index with level <= cutoff.
// Coefficient i belongs to enumerate_up_to(cutoff, dimension)[i]; that
// level-major lexicographic layout is frozen (it is also the serialization
// order), so each level occupies a contiguous slice.
struct SpectralField {
    int dimension = 1;
    int cutoff = 0;
    std::vector<Complex> coefficients;

    std::size_t size() const { return coefficients.size(); }
};

// The basis backing a field's coefficient layout, memoized per (cutoff,
// dimension).  The returned reference stays valid for the process lifetime
// and is safe to share across threads.
const std::vector<MultiIndex>& basis_for(int cutoff, int dimension);

// Contiguous coefficient range [begin, end) of one spectral level inside the
// frozen layout.  Empty range when the level is absent.
std::pair<std::size_t, std::size_t> level_slice(int cutoff, int dimension, int level);

SpectralField zero_field(int dimension, int cutoff);

// Field with a single unit coefficient at nu.
SpectralField unit_field(int dimension, int cutoff, const MultiIndex& nu);

// sqrt(sum |c_nu|^2); equals the L^2 norm of the synthesized function.
double coefficient_l2(const SpectralField& f);

Complex coefficient_inner(const SpectralField& a, const SpectralField& b);

// Hermite-Fourier analysis: c_nu ~= sum_i w_i f(x_i) phi_nu(x_i) on a
// plain-convention (compensated) grid.  Exact for band-limited f when the
// per-axis order M satisfies 2M - 1 >= 2 * max degree, i.e. M >= L.
SpectralField analyze(const std::function<Complex(std::span<const double>)>& f,
                      const QuadratureGrid& grid, int cutoff);

// Same, with f already sampled on the grid's points (values[i] = f(x_i)).
SpectralField analyze_samples(std::span<const Complex> values,
                              const QuadratureGrid& grid, int cutoff);

// Pointwise synthesis sum_nu c_nu phi_nu(x) on a tensor grid (fast path that
// reuses per-axis recurrence tables).
std::vector<Complex> synthesize(const SpectralField& f, const QuadratureGrid& grid);

// Synthesis at arbitrary flattened points (point i occupies
// points[i*n .. (i+1)*n)).
std::vector<Complex> synthesize_at(const SpectralField& f,
                                   std::span<const double> points);

// Eigenspace projection P_level: zeroes every coefficient off the level.
SpectralField project_level(const SpectralField& f, int level);

// All eigenspace projections sampled at once: row r holds P_{levels[r]} f on
// the grid.  This is the workhorse shared by the Triebel-Lizorkin norms, the
// exact time-L^2 profile, and the propagated space-time samples, so each
// trial pays the synthesis cost once.
struct LevelValues {
    std::vector<int> levels;      // ascending: n, n+2, ..., <= cutoff
    std::size_t point_count = 0;
    std::vector<Complex> data;    // levels.size() rows of point_count values

    std::span<const Complex> row(std::size_t r) const {
        return {data.data() + r * point_count, point_count};
    }
};

LevelValues level_synthesis(const SpectralField& f, const QuadratureGrid& grid);

// Same rows evaluated at arbitrary flattened points.
LevelValues level_synthesis_at(const SpectralField& f,
                               std::span<const double> points, int dimension);

} // namespace hosc
