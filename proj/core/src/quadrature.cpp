#include "hosc/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "hosc/types.hpp"

namespace hosc {

namespace {

// psi_M(z) and psi_{M-1}(z) from the normalized function recurrence.
void hermite_pair(int order, double z, double& top, double& below) {
    double prev = 0.0;
    double cur = kPiMQuarter * std::exp(-0.5 * z * z);
    for (int k = 0; k < order; ++k) {
        const double next = z * std::sqrt(2.0 / (k + 1)) * cur
                            - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    top = cur;
    below = prev;
}

} // namespace

QuadratureRule1D gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("Gauss-Hermite order must be >= 1");
    if (order > kGaussHermiteMaxOrder) {
        throw std::invalid_argument(
            "Gauss-Hermite order exceeds supported maximum (" +
            std::to_string(kGaussHermiteMaxOrder) +
            "): raw weights would underflow to zero");
    }

    QuadratureRule1D rule;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);
    rule.compensated.assign(order, 0.0);

    const int half = (order + 1) / 2;
    std::vector<double> desc(half);  // positive roots, largest first

    for (int i = 0; i < half; ++i) {
        double z;
        if (i == 0) {
            z = std::sqrt(2.0 * order + 1)
                - 1.85575 * std::pow(2.0 * order + 1, -1.0 / 6.0);
        } else if (i == 1) {
            z = desc[0] - 1.14 * std::pow(order, 0.426) / desc[0];
        } else if (i == 2) {
            z = 1.86 * desc[1] - 0.86 * desc[0];
        } else if (i == 3) {
            z = 1.91 * desc[2] - 0.91 * desc[1];
        } else {
            z = 2.0 * desc[i - 1] - desc[i - 2];
        }

        double top = 0.0;
        double below = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            hermite_pair(order, z, top, below);
            // psi_M'(z) = sqrt(2M) psi_{M-1}(z) - z psi_M(z)
            const double deriv = std::sqrt(2.0 * order) * below - z * top;
            const double dz = top / deriv;
            z -= dz;
            if (std::abs(dz) <= 1e-14 * (1.0 + std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw ResolutionError("Gauss-Hermite Newton iteration did not converge at order " +
                                  std::to_string(order));
        }
        hermite_pair(order, z, top, below);
        desc[i] = z;

        const double comp = 1.0 / (order * below * below);
        const double raw = comp * std::exp(-z * z);

        rule.nodes[order - 1 - i] = z;
        rule.nodes[i] = -z;
        rule.weights[order - 1 - i] = raw;
        rule.weights[i] = raw;
        rule.compensated[order - 1 - i] = comp;
        rule.compensated[i] = comp;
    }
    if (order % 2 == 1) rule.nodes[order / 2] = 0.0;

    return rule;
}

QuadratureRule1D gauss_legendre(int order, double a, double b) {
    if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be >= 1");
    QuadratureRule1D rule;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    const int half = (order + 1) / 2;
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) <= 3e-15) break;
        }
        rule.nodes[i] = xm - xl * z;
        rule.nodes[order - 1 - i] = xm + xl * z;
        const double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    rule.compensated = rule.weights;
    return rule;
}

QuadratureRule1D uniform_rule(int count, double radius) {
    if (count < 2) throw std::invalid_argument("uniform rule needs >= 2 nodes");
    QuadratureRule1D rule;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    const double h = 2.0 * radius / (count - 1);
    for (int i = 0; i < count; ++i) {
        rule.nodes[i] = -radius + h * i;
        rule.weights[i] = (i == 0 || i == count - 1) ? 0.5 * h : h;
    }
    rule.compensated = rule.weights;
    return rule;
}

QuadratureGrid tensor_grid(int dimension, const QuadratureRule1D& axis,
                           WeightConvention convention) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    const std::size_t m = axis.nodes.size();
    std::size_t total = 1;
    for (int j = 0; j < dimension; ++j) {
        if (total > 50'000'000 / m) {
            throw std::invalid_argument("tensor grid would exceed the point budget");
        }
        total *= m;
    }

    const std::vector<double>& axis_w =
        convention == WeightConvention::RawGaussian ? axis.weights : axis.compensated;

    QuadratureGrid grid;
    grid.dimension = dimension;
    grid.axis = axis;
    grid.convention = convention;
    grid.points.resize(total * static_cast<std::size_t>(dimension));
    grid.weights.resize(total);

    for (std::size_t i = 0; i < total; ++i) {
        std::size_t rest = i;
        double w = 1.0;
        // last axis varies fastest
        for (int j = dimension - 1; j >= 0; --j) {
            const std::size_t digit = rest % m;
            rest /= m;
            grid.points[i * dimension + j] = axis.nodes[digit];
            w *= axis_w[digit];
        }
        grid.weights[i] = w;
    }
    return grid;
}

QuadratureGrid gauss_hermite_grid(int dimension, int order, WeightConvention convention) {
    return tensor_grid(dimension, gauss_hermite(order), convention);
}

QuadratureGrid uniform_grid(int dimension, double radius, int per_axis) {
    return tensor_grid(dimension, uniform_rule(per_axis, radius), WeightConvention::Plain);
}

} // namespace hosc
