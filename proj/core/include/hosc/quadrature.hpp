#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hosc {

// One-dimensional Gauss-Hermite rule for the weight e^{-x^2}:
//
//   integral f(x) e^{-x^2} dx  ~=  sum_i weights[i] * f(nodes[i])
//
// `compensated[i] = weights[i] * e^{nodes[i]^2}` absorbs the weight into the
// rule so that plain integrals of Gaussian-decaying integrands read
//
//   integral g(x) dx  ~=  sum_i compensated[i] * g(nodes[i]).
//
// The compensated weights are computed directly from the normalized Hermite
// *function* recurrence (never via e^{+x^2} of a raw weight), so they are
// accurate at every order; the raw weights underflow for orders beyond
// kGaussHermiteMaxOrder and node generation refuses to go past it.
struct QuadratureRule1D {
    std::vector<double> nodes;        // strictly ascending, symmetric about 0
    std::vector<double> weights;      // raw, for weight e^{-x^2}
    std::vector<double> compensated;  // weights * e^{nodes^2}

    int order() const { return static_cast<int>(nodes.size()); }
};

// Largest supported Gauss-Hermite order.  Beyond this the raw tensor weights
// fall below the smallest positive double and positivity can no longer be
// guaranteed.
inline constexpr int kGaussHermiteMaxOrder = 384;

// Gauss-Hermite rule of the given order (1 <= order <= kGaussHermiteMaxOrder).
// Nodes are Newton-refined roots of the normalized Hermite function psi_order;
// an order-M rule integrates polynomials of degree 2M-1 times the Gaussian
// exactly, hence resolves products psi_j psi_k with j + k <= 2M - 1.
QuadratureRule1D gauss_hermite(int order);

// Gauss-Legendre rule on [a, b] (used for time integrals on finite windows).
// `weights` integrate plain dx; `compensated` is an identical copy so the
// struct can flow through grid-agnostic code.
QuadratureRule1D gauss_legendre(int order, double a, double b);

// Uniform rule on [-radius, radius] with `count` nodes including both
// endpoints (trapezoid weights, plain dx).  count must be >= 2.
QuadratureRule1D uniform_rule(int count, double radius);

// Which weights a tensor grid carries.
enum class WeightConvention {
    RawGaussian,  // weights integrate against e^{-|x|^2}
    Plain,        // weights integrate plain dx (compensated / uniform)
};

// Tensor product of one 1-d rule over all axes.  Point i occupies
// points[i*dimension .. (i+1)*dimension); the last axis varies fastest.
struct QuadratureGrid {
    int dimension = 1;
    QuadratureRule1D axis;        // the shared per-axis rule
    WeightConvention convention = WeightConvention::Plain;
    std::vector<double> points;   // flattened, size() * dimension entries
    std::vector<double> weights;  // per-point tensor weights in `convention`

    std::size_t size() const { return weights.size(); }
    std::span<const double> point(std::size_t i) const {
        return {points.data() + i * static_cast<std::size_t>(dimension),
                static_cast<std::size_t>(dimension)};
    }
};

QuadratureGrid tensor_grid(int dimension, const QuadratureRule1D& axis,
                           WeightConvention convention);

// Gauss-Hermite tensor grid; Plain convention uses the compensated weights.
QuadratureGrid gauss_hermite_grid(int dimension, int order,
                                  WeightConvention convention = WeightConvention::Plain);

// Uniform tensor grid on [-radius, radius]^dimension, trapezoid weights.
QuadratureGrid uniform_grid(int dimension, double radius, int per_axis);

} // namespace hosc
