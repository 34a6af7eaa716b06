#pragma once

#include <cstddef>

#include "lmc/instance.hpp"
#include "lmc/solve_report.hpp"

namespace lmc {

// Splits every block of p into its G-connected components, restoring the
// decomposition property. E-edges never straddle the split pieces, so the
// objective change is the sum of lifted costs between them.
partition canonicalize(const graph& g, const partition& p);
partition canonicalize(const lmp_instance& inst, const partition& p);

struct gaec_options {
    // Recompute every popped join cost from scratch and fail loudly on
    // mismatch. Test instrumentation; quadratic, keep off in production.
    bool verify_join_costs = false;
};

// Greedy additive edge contraction. Starts from singletons and repeatedly
// joins the neighboring pair with maximal join cost while that cost is
// positive. Trace holds one `contract` step per executed join.
solve_report gaec(const lmp_instance& inst, const gaec_options& options = {});

struct klj_options {
    std::size_t max_iterations = 100; // outer-loop safety cap
};

// Kernighan-Lin with joins. Local search over node moves between neighboring
// components, moves into fresh components, and complete joins; every
// executed transformation strictly decreases the objective.
solve_report klj(const lmp_instance& inst, const partition& init,
                 const klj_options& options = {});

struct exact_options {
    std::size_t max_nodes = 10;
};

// Exhaustive minimization over all decompositions of G. Oracle for small
// instances; `iterations` reports the number of decompositions evaluated.
// Ties broken toward the lexicographically smallest canonical partition.
solve_report solve_exact(const lmp_instance& inst, const exact_options& options = {});

} // namespace lmc
