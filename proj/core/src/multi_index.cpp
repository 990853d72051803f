#include "hosc/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hosc {

int MultiIndex::order() const {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

int MultiIndex::level() const {
    return 2 * order() + dimension();
}

namespace {

// Appends, in lexicographic order, every way of distributing `budget` over
// `slots` remaining entries.
void fill_order(std::vector<int>& prefix, int slots, int budget,
                std::vector<MultiIndex>& out) {
    if (slots == 1) {
        prefix.push_back(budget);
        out.push_back(MultiIndex{prefix});
        prefix.pop_back();
        return;
    }
    for (int head = 0; head <= budget; ++head) {
        prefix.push_back(head);
        fill_order(prefix, slots - 1, budget - head, out);
        prefix.pop_back();
    }
}

std::vector<MultiIndex> enumerate_order(int k, int dimension) {
    std::vector<MultiIndex> out;
    out.reserve(order_count(k, dimension));
    std::vector<int> prefix;
    prefix.reserve(dimension);
    fill_order(prefix, dimension, k, out);
    return out;
}

} // namespace

std::vector<MultiIndex> enumerate_level(int level, int dimension) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    if (level < dimension || (level - dimension) % 2 != 0) return {};
    return enumerate_order((level - dimension) / 2, dimension);
}

std::vector<MultiIndex> enumerate_up_to(int max_level, int dimension) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    std::vector<MultiIndex> out;
    for (int level = dimension; level <= max_level; level += 2) {
        auto block = enumerate_level(level, dimension);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::size_t order_count(int k, int dimension) {
    if (k < 0) return 0;
    // C(k + n - 1, n - 1) by running product; exact in 64 bits at toolkit scales.
    std::size_t c = 1;
    for (int j = 1; j <= dimension - 1; ++j) {
        c = c * static_cast<std::size_t>(k + j) / static_cast<std::size_t>(j);
    }
    return c;
}

std::size_t level_count(int level, int dimension) {
    if (level < dimension || (level - dimension) % 2 != 0) return 0;
    return order_count((level - dimension) / 2, dimension);
}

std::vector<int> levels_up_to(int max_level, int dimension) {
    std::vector<int> out;
    for (int level = dimension; level <= max_level; level += 2) out.push_back(level);
    return out;
}

} // namespace hosc
