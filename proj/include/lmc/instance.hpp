#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lmc/graph.hpp"
#include "lmc/partition.hpp"

namespace lmc {

class invalid_cost_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A lifted multicut instance: base graph G = (V, E), lifted edges F disjoint
// from E, and one finite cost per edge of E u F. Edges carry a global dense
// index, E first in graph order, then F.
class lmp_instance {
public:
    struct incidence {
        std::size_t node; // the other endpoint
        std::size_t edge; // global edge index
    };

    lmp_instance() = default;

    lmp_instance(graph g,
                 std::vector<std::pair<std::size_t, std::size_t>> lifted_edges,
                 std::vector<double> costs);

    const graph& base_graph() const { return graph_; }

    std::size_t node_count() const { return graph_.node_count(); }
    std::size_t base_edge_count() const { return graph_.edge_count(); }
    std::size_t lifted_edge_count() const { return lifted_edges_.size(); }
    std::size_t total_edge_count() const { return costs_.size(); }

    bool is_lifted(std::size_t global_edge) const {
        return global_edge >= graph_.edge_count();
    }

    std::pair<std::size_t, std::size_t> endpoints(std::size_t global_edge) const {
        return is_lifted(global_edge)
                   ? lifted_edges_[global_edge - graph_.edge_count()]
                   : graph_.edge_endpoints(global_edge);
    }

    double cost(std::size_t global_edge) const { return costs_[global_edge]; }
    const std::vector<double>& costs() const { return costs_; }

    const std::vector<std::pair<std::size_t, std::size_t>>& lifted_edges() const {
        return lifted_edges_;
    }

    // Adjacency over E u F, sorted by neighbor id.
    std::span<const incidence> incident(std::size_t v) const {
        return full_adjacency_[v];
    }

private:
    graph graph_;
    std::vector<std::pair<std::size_t, std::size_t>> lifted_edges_;
    std::vector<double> costs_;
    std::vector<std::vector<incidence>> full_adjacency_;
};

// 01-labeling of E u F in global edge order; 1 = cut, 0 = join.
using edge_labeling = std::vector<std::uint8_t>;

// Sum of costs over edges labeled 1.
double objective(const lmp_instance& inst, const edge_labeling& y);

// Same sum for the labeling induced by a partition; identical summation
// order, so the value matches objective(inst, labeling_from_partition(...))
// bit for bit. Works for any node partition, decomposition or not.
double objective(const lmp_instance& inst, const partition& p);

// Labeling of E u F with 1 exactly on edges straddling distinct blocks.
// Requires p to be a decomposition of G; the result is then feasible.
edge_labeling labeling_from_partition(const lmp_instance& inst, const partition& p);

// Connected components of (V, {e in E : y_e = 0}). Inverse of
// labeling_from_partition on feasible labelings.
partition partition_from_labeling(const lmp_instance& inst, const edge_labeling& y);

enum class violation_kind : std::uint8_t {
    cycle, // e in E labeled 1 inside a joined component
    path,  // f in F labeled 1 with endpoints joined
    cut,   // f in F labeled 0 with endpoints separated
};

const char* to_string(violation_kind k);

struct violation {
    violation_kind kind;
    std::size_t edge; // global edge index of the witness
};

// At most one witness per inequality family, each the first by global edge
// index; empty means the labeling is feasible (a lifted multicut).
struct feasibility_report {
    std::vector<violation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe(const lmp_instance& inst) const;
};

feasibility_report check_feasibility(const lmp_instance& inst, const edge_labeling& y);

} // namespace lmc
