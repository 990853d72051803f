#pragma once

#include <map>
#include <string>

#include "hosc/spectral.hpp"
#include "hosc/types.hpp"

namespace hosc {

// A spectral multiplier m(H): multiplication by m(level) on each eigenspace.
// Closed-form kinds cover the operators the toolkit exercises; `tabulated`
// handles arbitrary bounded symbols given per level (never per index — the
// operator only sees levels).
class Multiplier {
public:
    // m == 1
    static Multiplier identity();
    // m(l) = l^s; well-defined for any real s since every level is >= 1.
    static Multiplier h_power(double s);
    // m(l) = e^{-i t l}: the oscillator Schroedinger group at time t.
    static Multiplier oscillator_phase(double t);
    // m(l) = e^{-t l}: the heat semigroup at time t >= 0.
    static Multiplier heat_decay(double t);
    // m = 1_{[0, max_level]}: the partial-sum operator.
    static Multiplier level_cutoff(int max_level);
    // m = 1_{[level, level+1)}: a single-band indicator.
    static Multiplier level_band(int level);
    // Arbitrary per-level values; levels absent from the table map to 0.
    static Multiplier tabulated(std::map<int, Complex> values, std::string label);

    Complex at(int level) const;

    // max |m(l)| over the active levels {n, n+2, ..., cutoff}.
    double sup_over(int dimension, int cutoff) const;

    // The level <= cutoff attaining sup_over (smallest such level).
    int arg_sup(int dimension, int cutoff) const;

    const std::string& describe() const { return label_; }

private:
    enum class Kind { Identity, Power, Phase, Decay, Cutoff, Band, Table };

    Multiplier(Kind kind, double parameter, int level_parameter,
               std::map<int, Complex> table, std::string label);

    Kind kind_;
    double parameter_ = 0.0;
    int level_parameter_ = 0;
    std::map<int, Complex> table_;
    std::string label_;
};

// Coefficient at nu scaled by m(level(nu)).
SpectralField apply_multiplier(const SpectralField& f, const Multiplier& m);

// H^s f: multiplier l^s.  Negative s allowed (spectrum bounded below by n).
SpectralField apply_h_power(const SpectralField& f, double s);

} // namespace hosc
