#include "hosc/time_grid.hpp"

#include <stdexcept>

#include "hosc/quadrature.hpp"

namespace hosc {

TimeGrid TimeGrid::periodic_uniform(double period, int count) {
    if (count < 1) throw std::invalid_argument("time grid needs >= 1 node");
    if (period <= 0.0) throw std::invalid_argument("period must be positive");
    TimeGrid grid;
    grid.start = 0.0;
    grid.end = period;
    grid.periodic = true;
    grid.nodes.resize(count);
    grid.weights.assign(count, period / count);
    for (int j = 0; j < count; ++j) grid.nodes[j] = period * j / count;
    return grid;
}

TimeGrid TimeGrid::composite_gauss(const std::vector<double>& edges, int per_panel) {
    if (edges.size() < 2) throw std::invalid_argument("need at least one panel");
    TimeGrid grid;
    grid.start = edges.front();
    grid.end = edges.back();
    grid.periodic = false;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        if (edges[k + 1] <= edges[k]) {
            throw std::invalid_argument("panel edges must be strictly increasing");
        }
        const QuadratureRule1D panel = gauss_legendre(per_panel, edges[k], edges[k + 1]);
        grid.nodes.insert(grid.nodes.end(), panel.nodes.begin(), panel.nodes.end());
        grid.weights.insert(grid.weights.end(), panel.weights.begin(), panel.weights.end());
    }
    return grid;
}

} // namespace hosc
