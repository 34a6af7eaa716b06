#include "lmc/instance.hpp"

#include <algorithm>
#include <cmath>

#include "lmc/union_find.hpp"

namespace lmc {

lmp_instance::lmp_instance(graph g,
                           std::vector<std::pair<std::size_t, std::size_t>> lifted_edges,
                           std::vector<double> costs)
    : graph_(std::move(g)),
      lifted_edges_(std::move(lifted_edges)),
      costs_(std::move(costs)) {
    const std::size_t n = graph_.node_count();
    for (auto& [u, v] : lifted_edges_) {
        if (u >= n || v >= n)
            throw node_out_of_range_error("lifted edge endpoint out of range");
        if (u == v)
            throw self_loop_error("lifted self-loop at node " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
        if (graph_.find_edge(u, v))
            throw duplicate_edge_error("lifted edge (" + std::to_string(u) + "," +
                                       std::to_string(v) + ") duplicates a graph edge");
    }
    if (costs_.size() != graph_.edge_count() + lifted_edges_.size())
        throw std::invalid_argument("cost vector length " + std::to_string(costs_.size()) +
                                    " does not match edge count " +
                                    std::to_string(graph_.edge_count() + lifted_edges_.size()));
    for (const auto c : costs_)
        if (!std::isfinite(c))
            throw invalid_cost_error("edge cost must be finite");

    full_adjacency_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        full_adjacency_[v].reserve(graph_.degree(v));
        for (const auto& nb : graph_.neighbors(v))
            full_adjacency_[v].push_back({nb.node, nb.edge});
    }
    for (std::size_t i = 0; i < lifted_edges_.size(); ++i) {
        const auto [u, v] = lifted_edges_[i];
        const std::size_t global = graph_.edge_count() + i;
        full_adjacency_[u].push_back({v, global});
        full_adjacency_[v].push_back({u, global});
    }
    for (auto& adj : full_adjacency_) {
        std::sort(adj.begin(), adj.end(),
                  [](const incidence& a, const incidence& b) { return a.node < b.node; });
        for (std::size_t i = 1; i < adj.size(); ++i)
            if (adj[i].node == adj[i - 1].node)
                throw duplicate_edge_error("duplicate lifted edge (" +
                                           std::to_string(std::min(adj[i].node, adj[i - 1].node)) +
                                           ",...)");
    }
}

double objective(const lmp_instance& inst, const edge_labeling& y) {
    if (y.size() != inst.total_edge_count())
        throw std::invalid_argument("labeling length " + std::to_string(y.size()) +
                                    " does not match edge count " +
                                    std::to_string(inst.total_edge_count()));
    double sum = 0.0;
    for (std::size_t e = 0; e < y.size(); ++e)
        if (y[e])
            sum += inst.cost(e);
    return sum;
}

double objective(const lmp_instance& inst, const partition& p) {
    if (p.size() != inst.node_count())
        throw std::invalid_argument("partition size does not match node count");
    double sum = 0.0;
    for (std::size_t e = 0; e < inst.total_edge_count(); ++e) {
        const auto [u, v] = inst.endpoints(e);
        if (p.block_of(u) != p.block_of(v))
            sum += inst.cost(e);
    }
    return sum;
}

edge_labeling labeling_from_partition(const lmp_instance& inst, const partition& p) {
    if (!is_decomposition(inst.base_graph(), p))
        throw std::invalid_argument(
            "labeling_from_partition: partition is not a decomposition of G");
    edge_labeling y(inst.total_edge_count());
    for (std::size_t e = 0; e < y.size(); ++e) {
        const auto [u, v] = inst.endpoints(e);
        y[e] = p.block_of(u) != p.block_of(v) ? 1 : 0;
    }
    return y;
}

namespace {

// Components of the subgraph of E-edges labeled 0.
union_find zero_subgraph_components(const lmp_instance& inst, const edge_labeling& y) {
    union_find uf(inst.node_count());
    for (std::size_t e = 0; e < inst.base_edge_count(); ++e)
        if (!y[e]) {
            const auto [u, v] = inst.base_graph().edge_endpoints(e);
            uf.unite(u, v);
        }
    return uf;
}

} // namespace

partition partition_from_labeling(const lmp_instance& inst, const edge_labeling& y) {
    if (y.size() != inst.total_edge_count())
        throw std::invalid_argument("labeling length does not match edge count");
    return zero_subgraph_components(inst, y).to_partition();
}

const char* to_string(violation_kind k) {
    switch (k) {
    case violation_kind::cycle:
        return "cycle";
    case violation_kind::path:
        return "path";
    case violation_kind::cut:
        return "cut";
    }
    return "?";
}

std::string feasibility_report::describe(const lmp_instance& inst) const {
    if (ok())
        return "feasible";
    std::string out;
    for (const auto& v : violations) {
        const auto [a, b] = inst.endpoints(v.edge);
        if (!out.empty())
            out += "; ";
        out += std::string(to_string(v.kind)) + " violation on edge " +
               std::to_string(v.edge) + " (" + std::to_string(a) + "," +
               std::to_string(b) + ")";
    }
    return out;
}

feasibility_report check_feasibility(const lmp_instance& inst, const edge_labeling& y) {
    if (y.size() != inst.total_edge_count())
        throw std::invalid_argument("labeling length does not match edge count");
    auto uf = zero_subgraph_components(inst, y);

    feasibility_report report;
    bool cycle_found = false, path_found = false, cut_found = false;
    for (std::size_t e = 0; e < inst.total_edge_count(); ++e) {
        const auto [u, v] = inst.endpoints(e);
        const bool joined = uf.find(u) == uf.find(v);
        if (!inst.is_lifted(e)) {
            if (y[e] && joined && !cycle_found) {
                report.violations.push_back({violation_kind::cycle, e});
                cycle_found = true;
            }
        } else {
            if (y[e] && joined && !path_found) {
                report.violations.push_back({violation_kind::path, e});
                path_found = true;
            }
            if (!y[e] && !joined && !cut_found) {
                report.violations.push_back({violation_kind::cut, e});
                cut_found = true;
            }
        }
    }
    return report;
}

} // namespace lmc
