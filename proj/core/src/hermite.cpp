#include "hosc/hermite.hpp"

#include <cmath>
#include <stdexcept>

#include "hosc/types.hpp"

namespace hosc {

namespace {

void check_degree(int k) {
    if (k < 0) throw std::invalid_argument("Hermite degree must be >= 0");
}

} // namespace

double hermite_function(int k, double x) {
    check_degree(k);
    double prev = 0.0;
    double cur = kPiMQuarter * std::exp(-0.5 * x * x);
    for (int j = 0; j < k; ++j) {
        const double next = x * std::sqrt(2.0 / (j + 1)) * cur
                            - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> hermite_column(int max_degree, double x) {
    check_degree(max_degree);
    std::vector<double> col(static_cast<std::size_t>(max_degree) + 1);
    col[0] = kPiMQuarter * std::exp(-0.5 * x * x);
    if (max_degree == 0) return col;
    col[1] = x * std::sqrt(2.0) * col[0];
    for (int k = 1; k < max_degree; ++k) {
        col[k + 1] = x * std::sqrt(2.0 / (k + 1)) * col[k]
                     - std::sqrt(static_cast<double>(k) / (k + 1)) * col[k - 1];
    }
    return col;
}

HermiteTable hermite_table(int max_degree, std::span<const double> nodes) {
    check_degree(max_degree);
    HermiteTable table;
    table.max_degree = max_degree;
    table.node_count = nodes.size();
    table.values.resize((static_cast<std::size_t>(max_degree) + 1) * nodes.size());

    const std::size_t m = nodes.size();
    double* row0 = table.values.data();
    for (std::size_t i = 0; i < m; ++i) {
        row0[i] = kPiMQuarter * std::exp(-0.5 * nodes[i] * nodes[i]);
    }
    if (max_degree == 0) return table;

    double* row1 = row0 + m;
    const double s2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < m; ++i) row1[i] = nodes[i] * s2 * row0[i];

    for (int k = 1; k < max_degree; ++k) {
        const double a = std::sqrt(2.0 / (k + 1));
        const double b = std::sqrt(static_cast<double>(k) / (k + 1));
        const double* pk = table.values.data() + static_cast<std::size_t>(k) * m;
        const double* pk1 = pk - m;
        double* pk2 = table.values.data() + (static_cast<std::size_t>(k) + 1) * m;
        for (std::size_t i = 0; i < m; ++i) {
            pk2[i] = nodes[i] * a * pk[i] - b * pk1[i];
        }
    }
    return table;
}

double hermite_eval(const MultiIndex& nu, std::span<const double> point) {
    if (point.size() != nu.entries.size()) {
        throw std::invalid_argument("point dimension does not match multi-index");
    }
    double prod = 1.0;
    for (std::size_t j = 0; j < point.size(); ++j) {
        prod *= hermite_function(nu.entries[j], point[j]);
    }
    return prod;
}

} // namespace hosc
