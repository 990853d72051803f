#include "hosc/multiplier.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hosc {

namespace {

std::string format_param(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

} // namespace

Multiplier::Multiplier(Kind kind, double parameter, int level_parameter,
                       std::map<int, Complex> table, std::string label)
    : kind_(kind),
      parameter_(parameter),
      level_parameter_(level_parameter),
      table_(std::move(table)),
      label_(std::move(label)) {}

Multiplier Multiplier::identity() {
    return {Kind::Identity, 0.0, 0, {}, "identity"};
}

Multiplier Multiplier::h_power(double s) {
    return {Kind::Power, s, 0, {}, format_param("power(s=%.15g)", s)};
}

Multiplier Multiplier::oscillator_phase(double t) {
    return {Kind::Phase, t, 0, {}, format_param("phase(t=%.15g)", t)};
}

Multiplier Multiplier::heat_decay(double t) {
    if (t < 0.0) {
        throw std::invalid_argument("heat decay requires t >= 0");
    }
    return {Kind::Decay, t, 0, {}, format_param("decay(t=%.15g)", t)};
}

Multiplier Multiplier::level_cutoff(int max_level) {
    return {Kind::Cutoff, 0.0, max_level, {},
            "cutoff(max_level=" + std::to_string(max_level) + ")"};
}

Multiplier Multiplier::level_band(int level) {
    return {Kind::Band, 0.0, level, {},
            "band(level=" + std::to_string(level) + ")"};
}

Multiplier Multiplier::tabulated(std::map<int, Complex> values, std::string label) {
    return {Kind::Table, 0.0, 0, std::move(values), std::move(label)};
}

Complex Multiplier::at(int level) const {
    switch (kind_) {
        case Kind::Identity:
            return {1.0, 0.0};
        case Kind::Power:
            return {std::pow(static_cast<double>(level), parameter_), 0.0};
        case Kind::Phase:
            return std::exp(Complex{0.0, -parameter_ * level});
        case Kind::Decay:
            return {std::exp(-parameter_ * level), 0.0};
        case Kind::Cutoff:
            return {level <= level_parameter_ ? 1.0 : 0.0, 0.0};
        case Kind::Band:
            return {level == level_parameter_ ? 1.0 : 0.0, 0.0};
        case Kind::Table: {
            const auto it = table_.find(level);
            return it == table_.end() ? Complex{0.0, 0.0} : it->second;
        }
    }
    return {0.0, 0.0};
}

double Multiplier::sup_over(int dimension, int cutoff) const {
    double sup = 0.0;
    for (int level = dimension; level <= cutoff; level += 2) {
        sup = std::max(sup, std::abs(at(level)));
    }
    return sup;
}

int Multiplier::arg_sup(int dimension, int cutoff) const {
    int arg = dimension;
    double sup = -1.0;
    for (int level = dimension; level <= cutoff; level += 2) {
        const double v = std::abs(at(level));
        if (v > sup) {
            sup = v;
            arg = level;
        }
    }
    return arg;
}

SpectralField apply_multiplier(const SpectralField& f, const Multiplier& m) {
    SpectralField out = f;
    const int n = f.dimension;
    std::size_t i = 0;
    for (int level = n; level <= f.cutoff; level += 2) {
        const Complex scale = m.at(level);
        const std::size_t count = level_count(level, n);
        for (std::size_t k = 0; k < count; ++k, ++i) {
            out.coefficients[i] = f.coefficients[i] * scale;
        }
    }
    return out;
}

SpectralField apply_h_power(const SpectralField& f, double s) {
    return apply_multiplier(f, Multiplier::h_power(s));
}

} // namespace hosc
