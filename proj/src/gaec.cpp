#include <chrono>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "lmc/solvers.hpp"
#include "lmc/union_find.hpp"

namespace lmc {

namespace {

struct neighbor_info {
    double join_cost = 0.0;    // sum of E u F costs across the boundary
    bool graph_adjacent = false; // linked by at least one E-edge
    std::uint64_t version = 0;
};

struct queue_entry {
    double join_cost;
    std::size_t a, b; // a < b
    std::uint64_t version;
};

// Max join cost first; ties toward the smallest (a, b) pair.
struct queue_order {
    bool operator()(const queue_entry& x, const queue_entry& y) const {
        if (x.join_cost != y.join_cost)
            return x.join_cost < y.join_cost;
        if (x.a != y.a)
            return x.a > y.a;
        return x.b > y.b;
    }
};

} // namespace

solve_report gaec(const lmp_instance& inst, const gaec_options& options) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = inst.node_count();

    union_find forest(n);
    std::vector<std::map<std::size_t, neighbor_info>> adjacency(n);
    std::priority_queue<queue_entry, std::vector<queue_entry>, queue_order> queue;
    std::uint64_t version_counter = 0;

    for (std::size_t e = 0; e < inst.total_edge_count(); ++e) {
        const auto [u, v] = inst.endpoints(e);
        const bool in_graph = !inst.is_lifted(e);
        const neighbor_info info{inst.cost(e), in_graph, ++version_counter};
        adjacency[u].emplace(v, info);
        adjacency[v].emplace(u, info);
        if (in_graph)
            queue.push({info.join_cost, std::min(u, v), std::max(u, v), info.version});
    }

    solve_report report;
    while (!queue.empty()) {
        const auto top = queue.top();
        queue.pop();
        // Stale entries only ever overstate: every current cost has a live
        // entry, so a non-positive maximum ends the search.
        if (top.join_cost <= 0.0)
            break;
        if (forest.find(top.a) != top.a || forest.find(top.b) != top.b)
            continue;
        const auto it = adjacency[top.a].find(top.b);
        if (it == adjacency[top.a].end() || it->second.version != top.version)
            continue;

        if (options.verify_join_costs) {
            double boundary = 0.0;
            for (std::size_t e = 0; e < inst.total_edge_count(); ++e) {
                const auto [u, v] = inst.endpoints(e);
                const auto ru = forest.find(u), rv = forest.find(v);
                if ((ru == top.a && rv == top.b) || (ru == top.b && rv == top.a))
                    boundary += inst.cost(e);
            }
            if (std::abs(boundary - top.join_cost) > 1e-9)
                throw std::logic_error("gaec: join cost drifted from boundary cost");
        }

        // Contract: keep the component with the larger adjacency list.
        std::size_t keep = top.a, absorb = top.b;
        if (adjacency[keep].size() < adjacency[absorb].size())
            std::swap(keep, absorb);
        forest.union_into(keep, absorb);
        report.trace.push_back({step_kind::contract, -top.join_cost});
        ++report.iterations;

        adjacency[keep].erase(absorb);
        auto absorbed = std::move(adjacency[absorb]);
        adjacency[absorb].clear();
        absorbed.erase(keep);
        for (const auto& [other, info] : absorbed) {
            adjacency[other].erase(absorb);
            auto [entry, inserted] = adjacency[keep].try_emplace(other, info);
            if (!inserted) {
                entry->second.join_cost += info.join_cost;
                entry->second.graph_adjacent |= info.graph_adjacent;
            }
            entry->second.version = ++version_counter;
            adjacency[other][keep] = entry->second;
            if (entry->second.graph_adjacent)
                queue.push({entry->second.join_cost, std::min(keep, other),
                            std::max(keep, other), entry->second.version});
        }
    }

    report.result = forest.to_partition();
    report.objective = objective(inst, report.result);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace lmc
