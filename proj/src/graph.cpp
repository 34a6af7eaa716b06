#include "lmc/graph.hpp"

#include <algorithm>
#include <deque>

#include "lmc/union_find.hpp"

namespace lmc {

std::vector<std::size_t> graph_distances(const graph& g, std::size_t source,
                                         std::size_t cap) {
    if (source >= g.node_count())
        throw node_out_of_range_error("bfs source " + std::to_string(source) +
                                      " out of range");
    std::vector<std::size_t> dist(g.node_count(), unreachable);
    dist[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        if (dist[v] == cap)
            continue;
        for (const auto& nb : g.neighbors(v)) {
            if (dist[nb.node] == unreachable) {
                dist[nb.node] = dist[v] + 1;
                queue.push_back(nb.node);
            }
        }
    }
    return dist;
}

partition connected_components(const graph& g) {
    union_find uf(g.node_count());
    for (const auto& [u, v] : g.edges())
        uf.unite(u, v);
    return uf.to_partition();
}

partition connected_components(const graph& g, std::span<const std::size_t> subset) {
    std::vector<std::size_t> nodes(subset.begin(), subset.end());
    std::sort(nodes.begin(), nodes.end());
    if (!nodes.empty() && nodes.back() >= g.node_count())
        throw node_out_of_range_error("subset node " + std::to_string(nodes.back()) +
                                      " out of range");

    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> local(g.node_count(), unset);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        local[nodes[i]] = i;

    union_find uf(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (const auto& nb : g.neighbors(nodes[i]))
            if (local[nb.node] != unset)
                uf.unite(i, local[nb.node]);
    return uf.to_partition();
}

bool is_decomposition(const graph& g, const partition& p) {
    if (p.size() != g.node_count())
        throw std::invalid_argument("is_decomposition: partition covers " +
                                    std::to_string(p.size()) + " nodes, graph has " +
                                    std::to_string(g.node_count()));
    // A partition is a decomposition iff the subgraph of intra-block edges
    // has exactly one component per block.
    union_find uf(g.node_count());
    for (const auto& [u, v] : g.edges())
        if (p.block_of(u) == p.block_of(v))
            uf.unite(u, v);
    return uf.set_count() == p.block_count();
}

} // namespace lmc
