#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hosc/report.hpp"
#include "hosc/trial_family.hpp"

namespace hosc {

// Knobs shared by every verification suite.  Unset optionals (and empty
// lists) fall back to per-suite defaults; the values actually used are
// echoed into the report's params object.
struct SuiteConfig {
    std::optional<int> dimension;
    std::vector<int> cutoffs;      // also the degree list D for the Wainger suite
    std::vector<double> p_list;
    std::vector<double> q_list;    // paired with p_list where pairs matter
    std::optional<double> q;
    std::optional<double> s;
    std::optional<double> r;       // TL weight, or the Wainger L^r exponent
    std::vector<double> t_list;
    std::optional<int> trials;
    std::uint64_t seed = 42;
    std::optional<double> tolerance;
    std::optional<TrialKind> family;
    bool real_coefficients = false;
};

// Registered suite names, in the canonical order.
std::vector<std::string> suite_names();

// Runs one registered suite.  Throws std::invalid_argument for unknown
// names, HypothesisError when the exponents leave the asserted region, and
// ResolutionError when a grid cannot certify the requested tolerance.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

// Growth cap of the empirical-constant stability protocol:
// C_hat(2L) <= kStabilityFactor * C_hat(L).
inline constexpr double kStabilityFactor = 1.25;

} // namespace hosc
