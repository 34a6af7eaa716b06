#pragma once

#include <cstddef>
#include <vector>

#include "lmc/partition.hpp"

namespace lmc {

// Joint block-overlap counts between two partitions of the same ground set.
struct confusion_table {
    std::size_t total = 0;
    std::vector<std::size_t> row_sizes; // blocks of a
    std::vector<std::size_t> col_sizes; // blocks of b
    // sparse nonzero cells
    struct cell {
        std::size_t row, col, count;
    };
    std::vector<cell> cells;

    static confusion_table from(const partition& a, const partition& b);
};

enum class vi_base { bits, nats };

struct vi_result {
    double total;      // false_cut + false_join, by construction
    double false_cut;  // H(pred | truth): prediction cuts what truth joins
    double false_join; // H(truth | pred): prediction merges what truth separates
};

// Variation of information between a reference and a predicted partition,
// split into the false-cut and false-join conditional entropies.
vi_result variation_of_information(const partition& truth, const partition& pred,
                                   vi_base base = vi_base::bits);

// Fraction of unordered node pairs on which both partitions agree.
double rand_index(const partition& a, const partition& b);

} // namespace lmc
