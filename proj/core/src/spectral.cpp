#include "hosc/spectral.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hosc/hermite.hpp"

namespace hosc {

const std::vector<MultiIndex>& basis_for(int cutoff, int dimension) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<MultiIndex>>> cache;

    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{cutoff, dimension}];
    if (!slot) {
        slot = std::make_unique<std::vector<MultiIndex>>(
            enumerate_up_to(cutoff, dimension));
    }
    return *slot;
}

std::pair<std::size_t, std::size_t> level_slice(int cutoff, int dimension, int level) {
    if (level < dimension || level > cutoff || (level - dimension) % 2 != 0) {
        return {0, 0};
    }
    std::size_t begin = 0;
    for (int l = dimension; l < level; l += 2) begin += level_count(l, dimension);
    return {begin, begin + level_count(level, dimension)};
}

SpectralField zero_field(int dimension, int cutoff) {
    SpectralField f;
    f.dimension = dimension;
    f.cutoff = cutoff;
    f.coefficients.assign(basis_for(cutoff, dimension).size(), Complex{0.0, 0.0});
    return f;
}

SpectralField unit_field(int dimension, int cutoff, const MultiIndex& nu) {
    if (nu.dimension() != dimension) {
        throw std::invalid_argument("multi-index dimension mismatch");
    }
    if (nu.level() > cutoff) {
        throw std::invalid_argument("multi-index level exceeds cutoff");
    }
    SpectralField f = zero_field(dimension, cutoff);
    const auto& basis = basis_for(cutoff, dimension);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] == nu) {
            f.coefficients[i] = Complex{1.0, 0.0};
            return f;
        }
    }
    throw std::logic_error("multi-index not found in basis");
}

double coefficient_l2(const SpectralField& f) {
    double sum = 0.0;
    for (const Complex& c : f.coefficients) sum += std::norm(c);
    return std::sqrt(sum);
}

Complex coefficient_inner(const SpectralField& a, const SpectralField& b) {
    if (a.dimension != b.dimension || a.cutoff != b.cutoff) {
        throw std::invalid_argument("field layout mismatch");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < a.coefficients.size(); ++i) {
        sum += a.coefficients[i] * std::conj(b.coefficients[i]);
    }
    return sum;
}

namespace {

// Per-axis digit of each tensor point; digit j of point i indexes
// grid.axis.nodes.  Last axis fastest, matching tensor_grid.
std::vector<std::uint32_t> tensor_digits(std::size_t point_count, int dimension,
                                         std::size_t axis_size) {
    std::vector<std::uint32_t> digits(point_count * static_cast<std::size_t>(dimension));
    for (std::size_t i = 0; i < point_count; ++i) {
        std::size_t rest = i;
        for (int j = dimension - 1; j >= 0; --j) {
            digits[i * dimension + j] = static_cast<std::uint32_t>(rest % axis_size);
            rest /= axis_size;
        }
    }
    return digits;
}

int max_degree_of(int cutoff, int dimension) {
    return cutoff < dimension ? 0 : (cutoff - dimension) / 2;
}

void check_grid(const SpectralField& f, const QuadratureGrid& grid) {
    if (grid.dimension != f.dimension) {
        throw std::invalid_argument("grid dimension does not match field dimension");
    }
}

} // namespace

SpectralField analyze(const std::function<Complex(std::span<const double>)>& f,
                      const QuadratureGrid& grid, int cutoff) {
    std::vector<Complex> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) samples[i] = f(grid.point(i));
    return analyze_samples(samples, grid, cutoff);
}

SpectralField analyze_samples(std::span<const Complex> values,
                              const QuadratureGrid& grid, int cutoff) {
    if (grid.convention != WeightConvention::Plain) {
        throw std::invalid_argument("analysis requires plain-convention (compensated) weights");
    }
    if (values.size() != grid.size()) {
        throw std::invalid_argument("sample count does not match grid size");
    }

    SpectralField out = zero_field(grid.dimension, cutoff);
    const auto& basis = basis_for(cutoff, grid.dimension);
    if (basis.empty()) return out;

    const int n = grid.dimension;
    const std::size_t npts = grid.size();
    const HermiteTable table = hermite_table(max_degree_of(cutoff, n), grid.axis.nodes);
    const auto digits = tensor_digits(npts, n, grid.axis.nodes.size());

    std::vector<Complex> weighted(npts);
    for (std::size_t i = 0; i < npts; ++i) weighted[i] = grid.weights[i] * values[i];

    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const MultiIndex& nu = basis[idx];
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < npts; ++i) {
            double prod = 1.0;
            for (int j = 0; j < n; ++j) {
                prod *= table.at(nu.entries[j], digits[i * n + j]);
            }
            acc += weighted[i] * prod;
        }
        out.coefficients[idx] = acc;
    }
    return out;
}

std::vector<Complex> synthesize(const SpectralField& f, const QuadratureGrid& grid) {
    check_grid(f, grid);
    const auto& basis = basis_for(f.cutoff, f.dimension);
    const int n = f.dimension;
    const std::size_t npts = grid.size();
    std::vector<Complex> out(npts, Complex{0.0, 0.0});
    if (basis.empty()) return out;

    const HermiteTable table = hermite_table(max_degree_of(f.cutoff, n), grid.axis.nodes);
    const auto digits = tensor_digits(npts, n, grid.axis.nodes.size());

    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const Complex c = f.coefficients[idx];
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        const MultiIndex& nu = basis[idx];
        for (std::size_t i = 0; i < npts; ++i) {
            double prod = 1.0;
            for (int j = 0; j < n; ++j) {
                prod *= table.at(nu.entries[j], digits[i * n + j]);
            }
            out[i] += Complex{c.real() * prod, c.imag() * prod};
        }
    }
    return out;
}

std::vector<Complex> synthesize_at(const SpectralField& f,
                                   std::span<const double> points) {
    const int n = f.dimension;
    if (points.size() % n != 0) {
        throw std::invalid_argument("flattened point array length not divisible by dimension");
    }
    const std::size_t npts = points.size() / n;
    const auto& basis = basis_for(f.cutoff, f.dimension);
    std::vector<Complex> out(npts, Complex{0.0, 0.0});
    if (basis.empty()) return out;

    const int kmax = max_degree_of(f.cutoff, n);
    std::vector<std::vector<double>> cols(n);
    for (std::size_t i = 0; i < npts; ++i) {
        for (int j = 0; j < n; ++j) cols[j] = hermite_column(kmax, points[i * n + j]);
        Complex acc{0.0, 0.0};
        for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            const MultiIndex& nu = basis[idx];
            double prod = 1.0;
            for (int j = 0; j < n; ++j) prod *= cols[j][nu.entries[j]];
            const Complex c = f.coefficients[idx];
            acc += Complex{c.real() * prod, c.imag() * prod};
        }
        out[i] = acc;
    }
    return out;
}

SpectralField project_level(const SpectralField& f, int level) {
    SpectralField out = zero_field(f.dimension, f.cutoff);
    const auto [begin, end] = level_slice(f.cutoff, f.dimension, level);
    for (std::size_t i = begin; i < end; ++i) out.coefficients[i] = f.coefficients[i];
    return out;
}

namespace {

LevelValues level_values_impl(const SpectralField& f, const HermiteTable& table,
                              const std::uint32_t* digits, std::size_t npts) {
    const int n = f.dimension;
    const auto& basis = basis_for(f.cutoff, f.dimension);

    LevelValues lv;
    lv.levels = levels_up_to(f.cutoff, n);
    lv.point_count = npts;
    lv.data.assign(lv.levels.size() * npts, Complex{0.0, 0.0});

    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const Complex c = f.coefficients[idx];
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        const MultiIndex& nu = basis[idx];
        const std::size_t r = static_cast<std::size_t>((nu.level() - n) / 2);
        Complex* row = lv.data.data() + r * npts;
        for (std::size_t i = 0; i < npts; ++i) {
            double prod = 1.0;
            for (int j = 0; j < n; ++j) {
                prod *= table.at(nu.entries[j], digits[i * n + j]);
            }
            row[i] += Complex{c.real() * prod, c.imag() * prod};
        }
    }
    return lv;
}

} // namespace

LevelValues level_synthesis(const SpectralField& f, const QuadratureGrid& grid) {
    check_grid(f, grid);
    const HermiteTable table =
        hermite_table(max_degree_of(f.cutoff, f.dimension), grid.axis.nodes);
    const auto digits = tensor_digits(grid.size(), f.dimension, grid.axis.nodes.size());
    return level_values_impl(f, table, digits.data(), grid.size());
}

LevelValues level_synthesis_at(const SpectralField& f,
                               std::span<const double> points, int dimension) {
    if (dimension != f.dimension) {
        throw std::invalid_argument("point dimension does not match field dimension");
    }
    const int n = f.dimension;
    if (points.size() % n != 0) {
        throw std::invalid_argument("flattened point array length not divisible by dimension");
    }
    const std::size_t npts = points.size() / n;
    const auto& basis = basis_for(f.cutoff, f.dimension);

    LevelValues lv;
    lv.levels = levels_up_to(f.cutoff, n);
    lv.point_count = npts;
    lv.data.assign(lv.levels.size() * npts, Complex{0.0, 0.0});
    if (basis.empty()) return lv;

    const int kmax = max_degree_of(f.cutoff, n);
    std::vector<std::vector<double>> cols(n);
    for (std::size_t i = 0; i < npts; ++i) {
        for (int j = 0; j < n; ++j) cols[j] = hermite_column(kmax, points[i * n + j]);
        for (std::size_t idx = 0; idx < basis.size(); ++idx) {
            const Complex c = f.coefficients[idx];
            if (c.real() == 0.0 && c.imag() == 0.0) continue;
            const MultiIndex& nu = basis[idx];
            double prod = 1.0;
            for (int j = 0; j < n; ++j) prod *= cols[j][nu.entries[j]];
            const std::size_t r = static_cast<std::size_t>((nu.level() - n) / 2);
            lv.data[r * npts + i] += Complex{c.real() * prod, c.imag() * prod};
        }
    }
    return lv;
}

} // namespace hosc
