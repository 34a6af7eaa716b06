#include "lmc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lmc {

confusion_table confusion_table::from(const partition& a, const partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partitions compare different ground sets (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + " nodes)");
    confusion_table table;
    table.total = a.size();
    table.row_sizes.assign(a.block_count(), 0);
    table.col_sizes.assign(b.block_count(), 0);

    std::vector<std::pair<std::size_t, std::size_t>> keys(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
        keys[v] = {a.block_of(v), b.block_of(v)};
        ++table.row_sizes[keys[v].first];
        ++table.col_sizes[keys[v].second];
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i])
            ++j;
        table.cells.push_back({keys[i].first, keys[i].second, j - i});
        i = j;
    }
    return table;
}

vi_result variation_of_information(const partition& truth, const partition& pred,
                                   vi_base base) {
    const auto table = confusion_table::from(truth, pred);
    const double n = static_cast<double>(table.total);
    const auto log_fn = base == vi_base::bits
                            ? static_cast<double (*)(double)>(&std::log2)
                            : static_cast<double (*)(double)>(&std::log);

    // 0 * log 0 := 0; cells store only nonzero counts, so every term is finite.
    double false_join = 0.0, false_cut = 0.0;
    for (const auto& cell : table.cells) {
        const double joint = static_cast<double>(cell.count) / n;
        false_join += joint * log_fn(static_cast<double>(table.col_sizes[cell.col]) /
                                     static_cast<double>(cell.count));
        false_cut += joint * log_fn(static_cast<double>(table.row_sizes[cell.row]) /
                                    static_cast<double>(cell.count));
    }
    return {false_cut + false_join, false_cut, false_join};
}

double rand_index(const partition& a, const partition& b) {
    const auto table = confusion_table::from(a, b);
    if (table.total < 2)
        throw std::invalid_argument("rand_index needs at least 2 nodes");

    const auto pairs2 = [](std::size_t k) { return k * (k - 1) / 2; };
    std::size_t same_a = 0, same_b = 0, same_both = 0;
    for (const auto k : table.row_sizes)
        same_a += pairs2(k);
    for (const auto k : table.col_sizes)
        same_b += pairs2(k);
    for (const auto& cell : table.cells)
        same_both += pairs2(cell.count);

    const std::size_t all = pairs2(table.total);
    const std::size_t agreements = all - same_a - same_b + 2 * same_both;
    return static_cast<double>(agreements) / static_cast<double>(all);
}

} // namespace lmc
