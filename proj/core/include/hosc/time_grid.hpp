#pragma once

#include <vector>

#include "hosc/types.hpp"

namespace hosc {

// Quadrature nodes and weights on a time interval [start, end].
struct TimeGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double start = 0.0;
    double end = kTwoPi;
    bool periodic = false;

    std::size_t size() const { return nodes.size(); }
    double length() const { return end - start; }

    // Nodes j*T/count on [0, T) with equal weights T/count; exact for
    // trigonometric polynomials of frequency < count over a full period.
    static TimeGrid periodic_uniform(double period, int count);

    // Composite Gauss-Legendre: `per_panel` nodes on each span
    // [edges[k], edges[k+1]].
    static TimeGrid composite_gauss(const std::vector<double>& edges, int per_panel);
};

} // namespace hosc
