#include "lmc/lifting.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace lmc {

probabilistic_graph::probabilistic_graph(graph g_, std::vector<double> cut_prob_)
    : g(std::move(g_)), cut_prob(std::move(cut_prob_)) {
    if (cut_prob.size() != g.edge_count())
        throw std::invalid_argument("probability vector length " +
                                    std::to_string(cut_prob.size()) +
                                    " does not match edge count " +
                                    std::to_string(g.edge_count()));
    for (const auto p : cut_prob)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("edge probability outside [0,1]");
}

void lifting_params::validate() const {
    if (d_star < 1)
        throw std::invalid_argument("d_star must be >= 1");
    if (!(p_star > 0.0 && p_star < 1.0))
        throw std::invalid_argument("p_star must lie in (0,1)");
    if (!(clamp_eps > 0.0 && clamp_eps < 0.5))
        throw std::invalid_argument("clamp_eps must lie in (0,0.5)");
}

namespace {

double clamp_probability(double p, double eps) {
    return std::min(std::max(p, eps), 1.0 - eps);
}

} // namespace

double cost_from_probability(double p, double p_star, double clamp_eps) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability outside [0,1]");
    if (!(p_star > 0.0 && p_star < 1.0))
        throw std::invalid_argument("p_star must lie in (0,1)");
    if (!(clamp_eps > 0.0 && clamp_eps < 0.5))
        throw std::invalid_argument("clamp_eps must lie in (0,0.5)");
    p = clamp_probability(p, clamp_eps);
    return std::log((1.0 - p) / p) + std::log((1.0 - p_star) / p_star);
}

std::vector<lifted_pair> lifted_cut_probabilities(const probabilistic_graph& pg,
                                                  const lifting_params& params) {
    params.validate();
    const auto& g = pg.g;
    const std::size_t n = g.node_count();

    // -ln of the clamped join probability per E-edge; all weights > 0, so
    // Dijkstra's shortest walk is a simple path.
    std::vector<double> weight(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        weight[e] = -std::log(1.0 - clamp_probability(pg.cut_prob[e], params.clamp_eps));

    std::vector<lifted_pair> result;
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, inf);
    std::vector<char> in_ball(n, 0);
    std::vector<std::size_t> touched;

    using queue_item = std::pair<double, std::size_t>;
    std::priority_queue<queue_item, std::vector<queue_item>, std::greater<>> queue;

    for (std::size_t source = 0; source < n; ++source) {
        const auto hops = graph_distances(g, source, params.d_star);

        // Lifted partners of this source, emitted once from the smaller id.
        std::vector<std::size_t> partners;
        for (std::size_t w = source + 1; w < n; ++w)
            if (hops[w] != unreachable && hops[w] > 1)
                partners.push_back(w);
        if (partners.empty())
            continue;

        touched.clear();
        if (params.restrict_search_to_ball) {
            for (std::size_t w = 0; w < n; ++w)
                in_ball[w] = hops[w] != unreachable;
        }

        dist[source] = 0.0;
        touched.push_back(source);
        queue.push({0.0, source});
        while (!queue.empty()) {
            const auto [d, v] = queue.top();
            queue.pop();
            if (d > dist[v])
                continue;
            for (const auto& nb : g.neighbors(v)) {
                if (params.restrict_search_to_ball && !in_ball[nb.node])
                    continue;
                const double nd = d + weight[nb.edge];
                if (nd < dist[nb.node]) {
                    if (dist[nb.node] == inf)
                        touched.push_back(nb.node);
                    dist[nb.node] = nd;
                    queue.push({nd, nb.node});
                }
            }
        }

        for (const auto w : partners) {
            const double join_prob = std::exp(-dist[w]);
            result.push_back({source, w, 1.0 - join_prob});
        }
        for (const auto v : touched)
            dist[v] = inf;
    }
    return result;
}

lmp_instance geodesic_lift(const probabilistic_graph& pg, const lifting_params& params) {
    params.validate();
    const auto lifted = lifted_cut_probabilities(pg, params);

    std::vector<std::pair<std::size_t, std::size_t>> lifted_edges;
    lifted_edges.reserve(lifted.size());
    std::vector<double> costs;
    costs.reserve(pg.g.edge_count() + lifted.size());
    for (const auto p : pg.cut_prob)
        costs.push_back(cost_from_probability(p, params.p_star, params.clamp_eps));
    for (const auto& f : lifted) {
        lifted_edges.emplace_back(f.u, f.v);
        costs.push_back(cost_from_probability(f.cut_prob, params.p_star, params.clamp_eps));
    }
    return lmp_instance(pg.g, std::move(lifted_edges), std::move(costs));
}

} // namespace lmc
