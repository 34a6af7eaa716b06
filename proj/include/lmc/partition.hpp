#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lmc {

// Partition of the ground set {0, ..., n-1} into blocks with dense ids.
// Always kept canonical: block ids are assigned in order of first
// appearance, so structurally equal partitions compare equal element-wise.
class partition {
public:
    partition() = default;

    explicit partition(std::vector<std::size_t> block_of)
        : block_of_(std::move(block_of)) {
        canonicalize();
    }

    static partition singletons(std::size_t n) {
        std::vector<std::size_t> labels(n);
        for (std::size_t v = 0; v < n; ++v)
            labels[v] = v;
        return partition(std::move(labels));
    }

    static partition one_block(std::size_t n) {
        return partition(std::vector<std::size_t>(n, 0));
    }

    std::size_t size() const { return block_of_.size(); }
    std::size_t block_count() const { return block_count_; }

    std::size_t block_of(std::size_t v) const {
        if (v >= block_of_.size())
            throw std::out_of_range("partition: node id out of range");
        return block_of_[v];
    }

    const std::vector<std::size_t>& labels() const { return block_of_; }

    bool operator==(const partition&) const = default;

    // First-appearance renumbering. Idempotent.
    void canonicalize() {
        constexpr auto unset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> remap;
        std::size_t next = 0;
        for (auto& b : block_of_) {
            if (b >= remap.size())
                remap.resize(b + 1, unset);
            if (remap[b] == unset)
                remap[b] = next++;
            b = remap[b];
        }
        block_count_ = next;
    }

private:
    std::vector<std::size_t> block_of_;
    std::size_t block_count_ = 0;
};

} // namespace lmc
