#include "hosc/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hosc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_double(double v) {
    if (v == kInf) return "inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "INF") return kInf;
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) {
        throw std::invalid_argument("malformed number '" + text + "'");
    }
    return v;
}

} // namespace

NormSpec NormSpec::parse(const std::string& text) {
    const std::size_t colon = text.find(':');
    const std::string kind_name = text.substr(0, colon);

    NormSpec spec;
    if (kind_name == "Lp") spec.kind = NormKind::Lp;
    else if (kind_name == "MixedXT") spec.kind = NormKind::MixedXT;
    else if (kind_name == "MixedTX") spec.kind = NormKind::MixedTX;
    else if (kind_name == "TL") spec.kind = NormKind::TriebelLizorkin;
    else if (kind_name == "SobolevH2") spec.kind = NormKind::SobolevH2;
    else if (kind_name == "SobolevWp") spec.kind = NormKind::SobolevWp;
    else throw std::invalid_argument("unknown norm kind '" + kind_name + "'");

    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            const std::string item = rest.substr(0, comma);
            rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
            if (item.empty()) continue;
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("expected key=value in norm spec, got '" + item + "'");
            }
            const std::string key = item.substr(0, eq);
            const double value = parse_double(item.substr(eq + 1));
            if (key == "p") spec.p = value;
            else if (key == "q") spec.q = value;
            else if (key == "r") spec.r = value;
            else if (key == "s") spec.s = value;
            else if (key == "T") spec.T = value;
            else throw std::invalid_argument("unknown norm spec key '" + key + "'");
        }
    }
    spec.validate();
    return spec;
}

std::string NormSpec::canonical() const {
    switch (kind) {
        case NormKind::Lp:
            return "Lp:p=" + format_double(p);
        case NormKind::MixedXT:
            return "MixedXT:p=" + format_double(p) + ",q=" + format_double(q) +
                   ",T=" + format_double(T);
        case NormKind::MixedTX:
            return "MixedTX:p=" + format_double(p) + ",q=" + format_double(q) +
                   ",T=" + format_double(T);
        case NormKind::TriebelLizorkin:
            return "TL:r=" + format_double(r) + ",p=" + format_double(p) +
                   ",q=" + format_double(q);
        case NormKind::SobolevH2:
            return "SobolevH2:s=" + format_double(s);
        case NormKind::SobolevWp:
            return "SobolevWp:s=" + format_double(s) + ",p=" + format_double(p);
    }
    return {};
}

void NormSpec::validate() const {
    if (!(p > 0.0)) throw std::invalid_argument("exponent p must be positive (or inf)");
    if (!(q > 0.0)) throw std::invalid_argument("exponent q must be positive (or inf)");
    if (!(T > 0.0)) throw std::invalid_argument("time length T must be positive");
}

// ---- building blocks -------------------------------------------------------

namespace {

template <typename V>
double weighted_lp_impl(std::span<const V> values, std::span<const double> weights,
                        double p) {
    if (!(p > 0.0)) throw std::invalid_argument("exponent p must be positive (or inf)");
    if (p == kInf) {
        double sup = 0.0;
        for (const V& v : values) sup = std::max(sup, static_cast<double>(std::abs(v)));
        return sup;
    }
    if (values.size() != weights.size()) {
        throw std::invalid_argument("values/weights size mismatch");
    }
    double sum = 0.0;
    if (p == 2.0) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double a = std::abs(values[i]);
            sum += weights[i] * a * a;
        }
    } else if (p == 1.0) {
        for (std::size_t i = 0; i < values.size(); ++i) {
            sum += weights[i] * std::abs(values[i]);
        }
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) {
            sum += weights[i] * std::pow(std::abs(values[i]), p);
        }
    }
    return std::pow(sum, 1.0 / p);
}

} // namespace

double weighted_lp(std::span<const Complex> values, std::span<const double> weights,
                   double p) {
    return weighted_lp_impl(values, weights, p);
}

double weighted_lp(std::span<const double> values, std::span<const double> weights,
                   double p) {
    return weighted_lp_impl(values, weights, p);
}

double lp_norm(std::span<const Complex> values, const QuadratureGrid& grid, double p) {
    if (p != kInf && grid.convention != WeightConvention::Plain) {
        throw std::invalid_argument("L^p quadrature requires plain-convention weights");
    }
    return weighted_lp(values, grid.weights, p);
}

// ---- Triebel-Lizorkin -------------------------------------------------------

double tl_norm_from_levels(const LevelValues& levels, std::span<const double> weights,
                           double r, double p, double q,
                           std::span<const double> level_scale) {
    if (!(q > 0.0)) throw std::invalid_argument("exponent q must be positive (or inf)");
    const std::size_t nl = levels.levels.size();
    const std::size_t npts = levels.point_count;

    std::vector<double> factor(nl);
    for (std::size_t rr = 0; rr < nl; ++rr) {
        factor[rr] = std::pow(static_cast<double>(levels.levels[rr]), r);
        if (!level_scale.empty()) factor[rr] *= level_scale[rr];
    }

    std::vector<double> aggregate(npts, 0.0);
    if (q == kInf) {
        for (std::size_t rr = 0; rr < nl; ++rr) {
            const Complex* row = levels.data.data() + rr * npts;
            for (std::size_t i = 0; i < npts; ++i) {
                aggregate[i] = std::max(aggregate[i], factor[rr] * std::abs(row[i]));
            }
        }
    } else if (q == 2.0) {
        for (std::size_t rr = 0; rr < nl; ++rr) {
            const Complex* row = levels.data.data() + rr * npts;
            const double f2 = factor[rr] * factor[rr];
            for (std::size_t i = 0; i < npts; ++i) aggregate[i] += f2 * std::norm(row[i]);
        }
        for (double& g : aggregate) g = std::sqrt(g);
    } else {
        for (std::size_t rr = 0; rr < nl; ++rr) {
            const Complex* row = levels.data.data() + rr * npts;
            for (std::size_t i = 0; i < npts; ++i) {
                aggregate[i] += std::pow(factor[rr] * std::abs(row[i]), q);
            }
        }
        for (double& g : aggregate) g = std::pow(g, 1.0 / q);
    }
    return weighted_lp(std::span<const double>{aggregate}, weights, p);
}

double tl_norm(const SpectralField& f, double r, double p, double q,
               const QuadratureGrid& grid) {
    if (p != kInf && grid.convention != WeightConvention::Plain) {
        throw std::invalid_argument("L^p quadrature requires plain-convention weights");
    }
    const LevelValues lv = level_synthesis(f, grid);
    return tl_norm_from_levels(lv, grid.weights, r, p, q);
}

// ---- exact time-L^2 profile -------------------------------------------------

std::vector<double> l2t_profile_from_levels(const LevelValues& levels) {
    const std::size_t npts = levels.point_count;
    std::vector<double> out(npts, 0.0);
    for (std::size_t rr = 0; rr < levels.levels.size(); ++rr) {
        const Complex* row = levels.data.data() + rr * npts;
        for (std::size_t i = 0; i < npts; ++i) out[i] += std::norm(row[i]);
    }
    for (double& g : out) g = std::sqrt(kTwoPi * g);
    return out;
}

std::vector<double> l2t_profile(const SpectralField& f, const QuadratureGrid& grid) {
    return l2t_profile_from_levels(level_synthesis(f, grid));
}

// ---- mixed space-time norms ---------------------------------------------------

namespace {

void check_time_resolution(const SpaceTimeField& u) {
    if (!u.time.periodic) return;  // non-periodic grids manage their own panels
    const int needed = 8 * u.initial.cutoff;
    if (static_cast<int>(u.time.size()) < needed) {
        throw ResolutionError(
            "time grid with " + std::to_string(u.time.size()) +
            " nodes cannot resolve cutoff " + std::to_string(u.initial.cutoff) +
            " (need N_t >= 8L = " + std::to_string(needed) + ")");
    }
}

} // namespace

double mixed_norm_xt(const SpaceTimeField& u, double p, double q) {
    check_time_resolution(u);
    if (p != kInf && u.space.convention != WeightConvention::Plain) {
        throw std::invalid_argument("outer L^p requires plain-convention space weights");
    }
    const std::size_t npts = u.space.size();
    const std::size_t nt = u.time.size();

    std::vector<double> inner(npts, 0.0);
    if (q == kInf) {
        for (std::size_t j = 0; j < nt; ++j) {
            const Complex* slice = u.values.data() + j * npts;
            for (std::size_t i = 0; i < npts; ++i) {
                inner[i] = std::max(inner[i], std::abs(slice[i]));
            }
        }
    } else {
        for (std::size_t j = 0; j < nt; ++j) {
            const Complex* slice = u.values.data() + j * npts;
            const double wt = u.time.weights[j];
            if (q == 2.0) {
                for (std::size_t i = 0; i < npts; ++i) inner[i] += wt * std::norm(slice[i]);
            } else {
                for (std::size_t i = 0; i < npts; ++i) {
                    inner[i] += wt * std::pow(std::abs(slice[i]), q);
                }
            }
        }
        for (double& g : inner) g = std::pow(g, 1.0 / q);
    }
    return weighted_lp(std::span<const double>{inner}, u.space.weights, p);
}

double mixed_norm_tx(const SpaceTimeField& u, double q, double p) {
    check_time_resolution(u);
    if (p != kInf && u.space.convention != WeightConvention::Plain) {
        throw std::invalid_argument("inner L^p requires plain-convention space weights");
    }
    const std::size_t nt = u.time.size();
    std::vector<double> per_time(nt);
    for (std::size_t j = 0; j < nt; ++j) {
        per_time[j] = weighted_lp(u.at_time(j), u.space.weights, p);
    }
    return weighted_lp(std::span<const double>{per_time}, u.time.weights, q);
}

// ---- Sobolev ------------------------------------------------------------------

double sobolev_h_norm(const SpectralField& f, double s) {
    double sum = 0.0;
    std::size_t i = 0;
    for (int level = f.dimension; level <= f.cutoff; level += 2) {
        const double lam = std::pow(static_cast<double>(level), s);
        const std::size_t count = level_count(level, f.dimension);
        for (std::size_t k = 0; k < count; ++k, ++i) {
            sum += lam * std::norm(f.coefficients[i]);
        }
    }
    return std::sqrt(sum);
}

double sobolev_w_norm(const SpectralField& f, double s, double p,
                      const QuadratureGrid& grid) {
    const SpectralField hf = apply_h_power(f, s);
    return lp_norm(synthesize(hf, grid), grid, p);
}

// ---- default grids and facade ----------------------------------------------

QuadratureGrid default_grid(int dimension, int cutoff) {
    return gauss_hermite_grid(dimension, std::max(cutoff, 1) + 12,
                              WeightConvention::Plain);
}

QuadratureGrid sup_grid(int dimension, int cutoff) {
    const double radius = std::sqrt(2.0 * std::max(cutoff, 1)) + 4.0;
    int per_axis = 15;
    if (dimension == 1) per_axis = 4001;
    else if (dimension == 2) per_axis = 101;
    else if (dimension == 3) per_axis = 41;
    return uniform_grid(dimension, radius, per_axis);
}

double field_norm(const SpectralField& f, const NormSpec& spec) {
    spec.validate();
    const bool sup_space = spec.p == kInf;
    switch (spec.kind) {
        case NormKind::Lp: {
            const QuadratureGrid grid = sup_space ? sup_grid(f.dimension, f.cutoff)
                                                  : default_grid(f.dimension, f.cutoff);
            return lp_norm(synthesize(f, grid), grid, spec.p);
        }
        case NormKind::TriebelLizorkin: {
            const QuadratureGrid grid = sup_space ? sup_grid(f.dimension, f.cutoff)
                                                  : default_grid(f.dimension, f.cutoff);
            return tl_norm(f, spec.r, spec.p, spec.q, grid);
        }
        case NormKind::SobolevH2:
            return sobolev_h_norm(f, spec.s);
        case NormKind::SobolevWp: {
            const QuadratureGrid grid = sup_space ? sup_grid(f.dimension, f.cutoff)
                                                  : default_grid(f.dimension, f.cutoff);
            return sobolev_w_norm(f, spec.s, spec.p, grid);
        }
        case NormKind::MixedXT:
        case NormKind::MixedTX: {
            const QuadratureGrid grid = sup_space ? sup_grid(f.dimension, f.cutoff)
                                                  : default_grid(f.dimension, f.cutoff);
            if (spec.kind == NormKind::MixedXT && spec.q == 2.0 && spec.T == kTwoPi) {
                // exact in t: ||u(., x)||_{L^2_t} has the closed profile form
                const std::vector<double> profile = l2t_profile(f, grid);
                return weighted_lp(std::span<const double>{profile}, grid.weights,
                                   spec.p);
            }
            const TimeGrid time =
                TimeGrid::periodic_uniform(spec.T, 8 * std::max(f.cutoff, 1));
            const SpaceTimeField u = evolve_oscillator(f, time, grid);
            return spec.kind == NormKind::MixedXT ? mixed_norm_xt(u, spec.p, spec.q)
                                                  : mixed_norm_tx(u, spec.q, spec.p);
        }
    }
    throw std::logic_error("unreachable norm kind");
}

} // namespace hosc
