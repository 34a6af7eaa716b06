#pragma once

#include <cstddef>
#include <vector>

#include "lmc/graph.hpp"
#include "lmc/instance.hpp"

namespace lmc {

// Base graph plus, per E-edge, the probability of its endpoints lying in
// distinct components.
struct probabilistic_graph {
    graph g;
    std::vector<double> cut_prob;

    probabilistic_graph(graph g_, std::vector<double> cut_prob_);
};

struct lifting_params {
    std::size_t d_star = 10;   // maximum lifting hop distance
    double p_star = 0.5;       // prior cut probability, in (0,1)
    double clamp_eps = 1e-6;   // probabilities clamped to [eps, 1-eps]

    // Restrict the max-probability path search to nodes within hop distance
    // d_star of the source. An approximation that bounds per-source work;
    // disable to search the whole graph.
    bool restrict_search_to_ball = true;

    void validate() const;
};

// Signed cost of cutting an edge with cut probability p under prior p_star:
// ln((1-p)/p) + ln((1-p_star)/p_star), with p clamped to [eps, 1-eps].
// Positive cost rewards joining, negative rewards cutting.
double cost_from_probability(double p, double p_star, double clamp_eps = 1e-6);

struct lifted_pair {
    std::size_t u, v; // u < v
    double cut_prob;  // 1 - max over uv-paths of the product of join probs
};

// All pairs at hop distance in (1, d_star], with their cut probabilities,
// ordered by (u, v). The max-probability path is found by Dijkstra under
// edge weights -ln(1-p_e) after clamping.
std::vector<lifted_pair> lifted_cut_probabilities(const probabilistic_graph& pg,
                                                  const lifting_params& params);

// Assembles the full LMP instance: E-edge costs from the per-edge
// probabilities, lifted edges and costs from lifted_cut_probabilities.
lmp_instance geodesic_lift(const probabilistic_graph& pg, const lifting_params& params);

} // namespace lmc
