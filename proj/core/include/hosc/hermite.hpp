#pragma once

#include <span>
#include <vector>

#include "hosc/multi_index.hpp"

namespace hosc {

// L^2(R)-normalized Hermite functions via the stable three-term recurrence
//
//   psi_0(x)     = pi^{-1/4} exp(-x^2/2)
//   psi_1(x)     = sqrt(2) x psi_0(x)
//   psi_{k+1}(x) = x sqrt(2/(k+1)) psi_k(x) - sqrt(k/(k+1)) psi_{k-1}(x)
//
// The Gaussian is folded into psi_0, so intermediates stay bounded (the
// functions satisfy |psi_k| <~ 0.816) and no polynomial-scale overflow can
// occur at any k or x.

// psi_k(x) for a single (k, x).
double hermite_function(int k, double x);

// psi_0(x), ..., psi_{max_degree}(x) in one recurrence pass.
std::vector<double> hermite_column(int max_degree, double x);

// table[k * nodes.size() + i] = psi_k(nodes[i]); row-major with degree rows.
// Convenience layout for quadrature loops that sweep a fixed node set.
struct HermiteTable {
    int max_degree = 0;
    std::size_t node_count = 0;
    std::vector<double> values;

    double at(int degree, std::size_t node) const {
        return values[static_cast<std::size_t>(degree) * node_count + node];
    }
    std::span<const double> row(int degree) const {
        return {values.data() + static_cast<std::size_t>(degree) * node_count,
                node_count};
    }
};

HermiteTable hermite_table(int max_degree, std::span<const double> nodes);

// Tensor Hermite function phi_nu(x) = prod_j psi_{nu_j}(x_j).
// `point` must have nu.dimension() entries.
double hermite_eval(const MultiIndex& nu, std::span<const double> point);

} // namespace hosc
