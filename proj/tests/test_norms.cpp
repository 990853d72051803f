#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "hosc/multiplier.hpp"
#include "hosc/norms.hpp"
#include "hosc/propagators.hpp"
#include "hosc/spectral.hpp"
#include "hosc/time_grid.hpp"
#include "hosc/trial_family.hpp"
#include "hosc/types.hpp"

using namespace hosc;

namespace {

// || phi_0 ||_{L^p(R)} = pi^{-1/4} (2 pi / p)^{1/(2p)} for finite p
double ground_state_lp(double p) {
    return kPiMQuarter * std::pow(kTwoPi / p, 1.0 / (2.0 * p));
}

}  // namespace

TEST_CASE("weighted lp building block") {
    std::vector<double> v{3.0, 4.0};
    std::vector<double> w{1.0, 1.0};
    CHECK(weighted_lp(std::span<const double>(v), w, 2.0) == doctest::Approx(5.0));
    CHECK(weighted_lp(std::span<const double>(v), w, 1.0) == doctest::Approx(7.0));
    CHECK(weighted_lp(std::span<const double>(v), w,
                      std::numeric_limits<double>::infinity()) == doctest::Approx(4.0));
    std::vector<double> w2{0.25, 0.0};
    CHECK(weighted_lp(std::span<const double>(v), w2, 2.0) == doctest::Approx(1.5));
    std::vector<Complex> c{{0.0, 3.0}, {4.0, 0.0}};
    CHECK(weighted_lp(std::span<const Complex>(c), w, 2.0) == doctest::Approx(5.0));
}

TEST_CASE("ground-state L^p norms against the closed form") {
    SpectralField f = unit_field(1, 1, MultiIndex{{0}});
    // |phi_0|^p is not polynomial-times-Gaussian, so the cutoff-sized default
    // grid is too coarse for ten digits; take a dense Gauss-Hermite grid.
    auto grid = gauss_hermite_grid(1, 160);
    auto vals = synthesize(f, grid);
    for (double p : {1.0, 1.5, 2.0, 4.0, 6.0}) {
        CHECK(lp_norm(vals, grid, p) == doctest::Approx(ground_state_lp(p)).epsilon(1e-10));
    }
    // L^1 written out: pi^{-1/4} sqrt(2 pi)
    CHECK(lp_norm(vals, grid, 1.0) ==
          doctest::Approx(kPiMQuarter * std::sqrt(kTwoPi)).epsilon(1e-10));
    // sup norm realized at the center of the dense grid
    auto sgrid = sup_grid(1, 1);
    auto svals = synthesize(f, sgrid);
    CHECK(weighted_lp(std::span<const Complex>(svals), sgrid.weights,
                      std::numeric_limits<double>::infinity()) ==
          doctest::Approx(kPiMQuarter).epsilon(1e-12));
}

TEST_CASE("every L^2-flavored norm of an eigenfunction is one") {
    SpectralField f = unit_field(2, 6, MultiIndex{{1, 1}});  // level 6
    auto grid = default_grid(2, 6);
    auto vals = synthesize(f, grid);
    CHECK(lp_norm(vals, grid, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(coefficient_l2(f) == doctest::Approx(1.0));
    CHECK(sobolev_h_norm(f, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("Triebel-Lizorkin norm of a single level is the weighted L^p norm") {
    SpectralField f = unit_field(1, 5, MultiIndex{{2}});  // level 5
    auto grid = default_grid(1, 5);
    auto vals = synthesize(f, grid);
    double lp4 = lp_norm(vals, grid, 4.0);
    for (double q : {1.0, 2.0, 7.0, std::numeric_limits<double>::infinity()}) {
        CHECK(tl_norm(f, 0.0, 4.0, q, grid) == doctest::Approx(lp4).epsilon(1e-12));
        CHECK(tl_norm(f, 1.5, 4.0, q, grid) ==
              doctest::Approx(std::pow(5.0, 1.5) * lp4).epsilon(1e-12));
    }
}

TEST_CASE("level_scale argument reweights without re-synthesis") {
    TrialFamily fam;
    fam.dimension = 1;
    fam.cutoff = 9;
    SpectralField f = fam.draw(4);
    auto grid = default_grid(1, 9);
    LevelValues lv = level_synthesis(f, grid);
    // scale levels by 1/l: same as applying the h_power(-1) multiplier
    std::vector<double> scale;
    for (int l : lv.levels) scale.push_back(1.0 / l);
    double a = tl_norm_from_levels(lv, grid.weights, 0.0, 4.0, 2.0, scale);
    SpectralField g = apply_h_power(f, -1.0);
    double b = tl_norm(g, 0.0, 4.0, 2.0, grid);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("the time-L^2 profile squares to 2pi times the level sum") {
    TrialFamily fam;
    fam.dimension = 1;
    fam.cutoff = 7;
    SpectralField f = fam.draw(11);
    auto grid = default_grid(1, 7);
    LevelValues lv = level_synthesis(f, grid);
    auto profile = l2t_profile_from_levels(lv);
    REQUIRE(profile.size() == grid.size());
    for (std::size_t i = 0; i < profile.size(); ++i) {
        double sum = 0.0;
        for (std::size_t r = 0; r < lv.levels.size(); ++r) sum += std::norm(lv.row(r)[i]);
        CHECK(profile[i] == doctest::Approx(std::sqrt(kTwoPi * sum)).epsilon(1e-13));
    }
    auto profile2 = l2t_profile(f, grid);
    for (std::size_t i = 0; i < profile.size(); ++i)
        CHECK(profile[i] == doctest::Approx(profile2[i]).epsilon(1e-14));
}

TEST_CASE("mixed norm with q=2 equals the exact profile route") {
    TrialFamily fam;
    fam.dimension = 1;
    fam.cutoff = 6;
    SpectralField f = fam.draw(2);
    auto grid = default_grid(1, 6);
    auto tg = TimeGrid::periodic_uniform(kTwoPi, 8 * 6);
    SpaceTimeField u = evolve_oscillator(f, tg, grid);
    double quad = mixed_norm_xt(u, 4.0, 2.0);
    LevelValues lv = level_synthesis(f, grid);
    auto profile = l2t_profile_from_levels(lv);
    double exact = weighted_lp(std::span<const double>(profile), grid.weights, 4.0);
    CHECK(quad == doctest::Approx(exact).epsilon(1e-12));
    // and for p = q = 2 both collapse to sqrt(2pi) ||f||_2
    CHECK(mixed_norm_xt(u, 2.0, 2.0) ==
          doctest::Approx(std::sqrt(kTwoPi) * coefficient_l2(f)).epsilon(1e-12));
}

TEST_CASE("under-resolved periodic time grids are rejected") {
    TrialFamily fam;
    fam.dimension = 1;
    fam.cutoff = 6;
    SpectralField f = fam.draw(0);
    auto grid = default_grid(1, 6);
    auto tg = TimeGrid::periodic_uniform(kTwoPi, 16);  // needs 8 * 6 = 48
    SpaceTimeField u = evolve_oscillator(f, tg, grid);
    CHECK_THROWS_AS(mixed_norm_xt(u, 4.0, 2.0), ResolutionError);
    CHECK_THROWS_AS(mixed_norm_tx(u, 2.0, 4.0), ResolutionError);
}

TEST_CASE("Sobolev norms") {
    SpectralField f = unit_field(1, 5, MultiIndex{{2}});  // level 5
    CHECK(sobolev_h_norm(f, 2.0) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(sobolev_h_norm(f, 1.0) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
    auto grid = default_grid(1, 5);
    // H^s phi_0 = phi_0 at level 1: W-norm equals the plain L^p norm
    SpectralField g = unit_field(1, 1, MultiIndex{{0}});
    auto ggrid = gauss_hermite_grid(1, 160);
    CHECK(sobolev_w_norm(g, 3.0, 4.0, ggrid) ==
          doctest::Approx(ground_state_lp(4.0)).epsilon(1e-10));
    CHECK(sobolev_w_norm(f, 1.0, 2.0, grid) == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("norm spec parsing, canonical form, and validation") {
    NormSpec spec = NormSpec::parse("MixedXT:p=4,q=2,T=6.283185307179586");
    CHECK(spec.kind == NormKind::MixedXT);
    CHECK(spec.p == 4.0);
    CHECK(spec.q == 2.0);
    CHECK(spec.T == kTwoPi);  // 16-digit decimal parses to the exact double

    NormSpec inf_spec = NormSpec::parse("Lp:p=inf");
    CHECK(std::isinf(inf_spec.p));

    NormSpec tl = NormSpec::parse("TL:r=0.25,p=2,q=2");
    CHECK(tl.r == 0.25);

    // canonical strings round-trip
    NormSpec again = NormSpec::parse(spec.canonical());
    CHECK(again.kind == spec.kind);
    CHECK(again.p == spec.p);
    CHECK(again.q == spec.q);
    CHECK(again.T == spec.T);

    CHECK_THROWS_AS(NormSpec::parse("Banana:p=2"), std::invalid_argument);
    CHECK_THROWS_AS(NormSpec::parse("Lp:zz=2"), std::invalid_argument);
    NormSpec bad = NormSpec::parse("Lp:p=2");
    bad.p = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("field_norm facade covers every norm kind") {
    SpectralField phi0 = unit_field(1, 1, MultiIndex{{0}});
    CHECK(field_norm(phi0, NormSpec::parse("Lp:p=2")) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(field_norm(phi0, NormSpec::parse("TL:r=1,p=2,q=2")) ==
          doctest::Approx(1.0).epsilon(1e-12));  // level 1, 1^r = 1
    SpectralField e2 = unit_field(1, 5, MultiIndex{{2}});
    CHECK(field_norm(e2, NormSpec::parse("SobolevH2:s=2")) ==
          doctest::Approx(5.0).epsilon(1e-12));
    CHECK(field_norm(e2, NormSpec::parse("SobolevWp:s=1,p=2")) ==
          doctest::Approx(5.0).epsilon(1e-10));
    // mixed facade: exact route for q=2 over the full period
    TrialFamily fam;
    fam.dimension = 1;
    fam.cutoff = 6;
    SpectralField f = fam.draw(5);
    double mixed = field_norm(f, NormSpec::parse("MixedXT:p=4,q=2"));
    auto grid = default_grid(1, 6);
    LevelValues lv = level_synthesis(f, grid);
    auto profile = l2t_profile_from_levels(lv);
    CHECK(mixed == doctest::Approx(weighted_lp(std::span<const double>(profile),
                                               grid.weights, 4.0)).epsilon(1e-12));
    // quadrature route for q != 2 stays within a whisker of Minkowski bounds
    double xt = field_norm(f, NormSpec::parse("MixedXT:p=4,q=4"));
    double tx = field_norm(f, NormSpec::parse("MixedTX:q=4,p=4"));
    CHECK(xt == doctest::Approx(tx).epsilon(1e-10));  // p = q: orders agree
    double sup_mixed = field_norm(f, NormSpec::parse("MixedXT:p=inf,q=2"));
    CHECK(sup_mixed > 0.0);
}

TEST_CASE("parseval ties the L^2 facade to coefficients for random fields") {
    TrialFamily fam;
    fam.dimension = 2;
    fam.cutoff = 8;
    for (int t = 0; t < 3; ++t) {
        SpectralField f = fam.draw(t);
        CHECK(field_norm(f, NormSpec::parse("Lp:p=2")) ==
              doctest::Approx(coefficient_l2(f)).epsilon(1e-10));
    }
}
