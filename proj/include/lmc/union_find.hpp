#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "lmc/partition.hpp"

namespace lmc {

// Disjoint-set forest with path compression and union by rank.
class union_find {
public:
    explicit union_find(std::size_t n)
        : parent_(n), rank_(n, 0), set_count_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t size() const { return parent_.size(); }
    std::size_t set_count() const { return set_count_; }

    std::size_t find(std::size_t v) {
        std::size_t root = v;
        while (parent_[root] != root)
            root = parent_[root];
        while (parent_[v] != root) {
            const auto next = parent_[v];
            parent_[v] = root;
            v = next;
        }
        return root;
    }

    // Merges the classes of a and b; returns false if already merged.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
        --set_count_;
        return true;
    }

    // Merges so that the class of `keep` stays the representative.
    // Both arguments must be current representatives.
    void union_into(std::size_t keep, std::size_t absorb) {
        parent_[absorb] = keep;
        if (rank_[keep] <= rank_[absorb])
            rank_[keep] = rank_[absorb] + 1;
        --set_count_;
    }

    partition to_partition() {
        std::vector<std::size_t> labels(parent_.size());
        for (std::size_t v = 0; v < parent_.size(); ++v)
            labels[v] = find(v);
        return partition(std::move(labels));
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
    std::size_t set_count_;
};

} // namespace lmc
