#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hosc {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kSqrtPi = 1.7724538509055160272981674833411;
// pi^{-1/4}, the peak value of the Hermite ground state.
inline constexpr double kPiMQuarter = 0.7511255444649424828587030047762;

// A requested computation lies outside the exponent region where the
// inequality under test is asserted to hold.  `constraint()` returns the
// violated condition verbatim so callers can surface it unchanged.
class HypothesisError : public std::invalid_argument {
public:
    HypothesisError(std::string constraint, const std::string& detail)
        : std::invalid_argument(detail + " [constraint: " + constraint + "]"),
          constraint_(std::move(constraint)) {}

    const std::string& constraint() const noexcept { return constraint_; }

private:
    std::string constraint_;
};

// A grid, cutoff, or time axis is too coarse to certify the requested
// quantity at the requested tolerance.
class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hosc
