#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lmc/partition.hpp"

namespace lmc {

class graph_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class node_out_of_range_error : public graph_error {
    using graph_error::graph_error;
};

class self_loop_error : public graph_error {
    using graph_error::graph_error;
};

class duplicate_edge_error : public graph_error {
    using graph_error::graph_error;
};

// Simple undirected graph over node ids 0..n-1. Edge ids are dense indices
// in insertion order; endpoints are normalized to u < v. Adjacency lists
// are kept sorted by neighbor id.
class graph {
public:
    struct neighbor {
        std::size_t node;
        std::size_t edge;
    };

    graph() = default;

    graph(std::size_t node_count,
          const std::vector<std::pair<std::size_t, std::size_t>>& edge_list)
        : node_count_(node_count), adjacency_(node_count) {
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list)
            add_edge_unchecked(u, v);
        for (auto& adj : adjacency_) {
            std::sort(adj.begin(), adj.end(),
                      [](const neighbor& a, const neighbor& b) { return a.node < b.node; });
            for (std::size_t i = 1; i < adj.size(); ++i)
                if (adj[i].node == adj[i - 1].node)
                    throw duplicate_edge_error("duplicate edge " + edge_name(adj[i].edge));
        }
    }

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::pair<std::size_t, std::size_t> edge_endpoints(std::size_t e) const {
        return edges_[e];
    }

    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    std::span<const neighbor> neighbors(std::size_t v) const {
        check_node(v);
        return adjacency_[v];
    }

    std::size_t degree(std::size_t v) const {
        check_node(v);
        return adjacency_[v].size();
    }

    std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const {
        check_node(u);
        check_node(v);
        const auto& adj = adjacency_[u];
        auto it = std::lower_bound(adj.begin(), adj.end(), v,
                                   [](const neighbor& a, std::size_t b) { return a.node < b; });
        if (it != adj.end() && it->node == v)
            return it->edge;
        return std::nullopt;
    }

private:
    void check_node(std::size_t v) const {
        if (v >= node_count_)
            throw node_out_of_range_error("node id " + std::to_string(v) +
                                          " out of range (node count " +
                                          std::to_string(node_count_) + ")");
    }

    std::string edge_name(std::size_t e) const {
        return "(" + std::to_string(edges_[e].first) + "," +
               std::to_string(edges_[e].second) + ")";
    }

    void add_edge_unchecked(std::size_t u, std::size_t v) {
        check_node(u);
        check_node(v);
        if (u == v)
            throw self_loop_error("self-loop at node " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        const std::size_t id = edges_.size();
        edges_.emplace_back(u, v);
        adjacency_[u].push_back({v, id});
        adjacency_[v].push_back({u, id});
    }

    std::size_t node_count_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<neighbor>> adjacency_;
};

// Marker for nodes beyond the cap or in another component.
inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

// Breadth-first hop distances from `source`, up to `cap` hops; nodes farther
// than the cap are reported as unreachable.
std::vector<std::size_t> graph_distances(const graph& g, std::size_t source,
                                         std::size_t cap = unreachable);

// Connected components of g as a partition of all nodes.
partition connected_components(const graph& g);

// Components of the subgraph induced by `subset`. The result is a partition
// of the subset: entry i refers to subset node subset[i]. The subset is
// processed in ascending node order, so block ids are canonical by node id.
partition connected_components(const graph& g, std::span<const std::size_t> subset);

// True iff every block of p induces a connected subgraph of g.
bool is_decomposition(const graph& g, const partition& p);

} // namespace lmc
