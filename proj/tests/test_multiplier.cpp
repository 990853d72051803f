#include "doctest.h"

#include <cmath>
#include <complex>
#include <map>

#include "hosc/multiplier.hpp"
#include "hosc/spectral.hpp"
#include "hosc/types.hpp"

using namespace hosc;

TEST_CASE("closed-form symbols evaluate per level") {
    CHECK(Multiplier::identity().at(7) == Complex{1.0, 0.0});
    CHECK(Multiplier::h_power(-1.0).at(5) == Complex{0.2, 0.0});
    CHECK(Multiplier::h_power(2.0).at(3) == Complex{9.0, 0.0});
    Complex ph = Multiplier::oscillator_phase(0.7).at(3);
    CHECK(ph.real() == doctest::Approx(std::cos(2.1)).epsilon(1e-15));
    CHECK(ph.imag() == doctest::Approx(-std::sin(2.1)).epsilon(1e-15));
    CHECK(Multiplier::heat_decay(0.5).at(2).real() == doctest::Approx(std::exp(-1.0)));
    CHECK_THROWS_AS(Multiplier::heat_decay(-0.1), std::invalid_argument);
}

TEST_CASE("indicator symbols") {
    auto cutoff = Multiplier::level_cutoff(5);
    CHECK(cutoff.at(3) == Complex{1.0, 0.0});
    CHECK(cutoff.at(5) == Complex{1.0, 0.0});
    CHECK(cutoff.at(7) == Complex{0.0, 0.0});
    auto band = Multiplier::level_band(5);
    CHECK(band.at(5) == Complex{1.0, 0.0});
    CHECK(band.at(3) == Complex{0.0, 0.0});
}

TEST_CASE("tabulated symbols default to zero off the table") {
    std::map<int, Complex> table{{1, {0.5, 0.5}}, {3, {0.0, -2.0}}};
    auto m = Multiplier::tabulated(table, "test-table");
    CHECK(m.at(1) == Complex{0.5, 0.5});
    CHECK(m.at(3) == Complex{0.0, -2.0});
    CHECK(m.at(5) == Complex{0.0, 0.0});
    CHECK(m.describe() == "test-table");
}

TEST_CASE("sup and arg-sup scan the active levels only") {
    // n=1, L=9: active levels 1, 3, 5, 7, 9
    CHECK(Multiplier::h_power(-1.0).sup_over(1, 9) == doctest::Approx(1.0));
    CHECK(Multiplier::h_power(-1.0).arg_sup(1, 9) == 1);
    CHECK(Multiplier::h_power(2.0).sup_over(1, 9) == doctest::Approx(81.0));
    CHECK(Multiplier::h_power(2.0).arg_sup(1, 9) == 9);
    // phases all have modulus one; arg-sup picks the smallest level
    CHECK(Multiplier::oscillator_phase(0.3).sup_over(1, 9) == doctest::Approx(1.0));
    CHECK(Multiplier::oscillator_phase(0.3).arg_sup(1, 9) == 1);
    // n=2: active levels are even
    CHECK(Multiplier::h_power(1.0).sup_over(2, 9) == doctest::Approx(8.0));
}

TEST_CASE("applying a multiplier scales coefficients by level") {
    SpectralField f = zero_field(1, 5);
    f.coefficients[0] = Complex{1.0, 0.0};  // level 1
    f.coefficients[1] = Complex{0.0, 1.0};  // level 3
    f.coefficients[2] = Complex{2.0, 0.0};  // level 5
    SpectralField g = apply_multiplier(f, Multiplier::h_power(1.0));
    CHECK(g.coefficients[0] == Complex{1.0, 0.0});
    CHECK(g.coefficients[1] == Complex{0.0, 3.0});
    CHECK(g.coefficients[2] == Complex{10.0, 0.0});

    SpectralField h = apply_h_power(f, -1.0);
    CHECK(h.coefficients[2].real() == doctest::Approx(0.4));
}

TEST_CASE("half powers compose to whole powers") {
    SpectralField f = zero_field(2, 8);
    for (std::size_t i = 0; i < f.size(); ++i)
        f.coefficients[i] = Complex{0.1 * static_cast<double>(i + 1), -0.3};
    SpectralField twice = apply_h_power(apply_h_power(f, 0.5), 0.5);
    SpectralField once = apply_h_power(f, 1.0);
    for (std::size_t i = 0; i < f.size(); ++i)
        CHECK(std::abs(twice.coefficients[i] - once.coefficients[i]) < 1e-12);
}

TEST_CASE("phase multipliers preserve the coefficient norm") {
    SpectralField f = zero_field(1, 11);
    for (std::size_t i = 0; i < f.size(); ++i)
        f.coefficients[i] = Complex{std::sin(i + 1.0), std::cos(2.0 * i)};
    double before = coefficient_l2(f);
    double after = coefficient_l2(apply_multiplier(f, Multiplier::oscillator_phase(1.234)));
    CHECK(after == doctest::Approx(before).epsilon(1e-14));
}
