#include "lmc/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace lmc {

lmp_instance make_grid_instance(std::size_t width, std::size_t height,
                                std::span<const double> pixel_probs,
                                const lifting_params& params) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("grid dimensions must be >= 1");
    if (pixel_probs.size() != width * height)
        throw std::invalid_argument("probability grid has " +
                                    std::to_string(pixel_probs.size()) +
                                    " values, expected " + std::to_string(width * height));

    const auto pixel = [&](std::size_t row, std::size_t col) { return row * width + col; };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<double> edge_prob;
    edges.reserve(width * (height - 1) + height * (width - 1));
    for (std::size_t row = 0; row < height; ++row) {
        for (std::size_t col = 0; col < width; ++col) {
            const auto p = pixel_probs[pixel(row, col)];
            if (col + 1 < width) {
                edges.emplace_back(pixel(row, col), pixel(row, col + 1));
                edge_prob.push_back(0.5 * (p + pixel_probs[pixel(row, col + 1)]));
            }
            if (row + 1 < height) {
                edges.emplace_back(pixel(row, col), pixel(row + 1, col));
                edge_prob.push_back(0.5 * (p + pixel_probs[pixel(row + 1, col)]));
            }
        }
    }

    probabilistic_graph pg(graph(width * height, edges), std::move(edge_prob));
    return geodesic_lift(pg, params);
}

lmp_instance make_random_instance(const random_instance_params& params) {
    if (params.nodes < 1)
        throw std::invalid_argument("need at least one node");
    if (!(params.edge_density > 0.0 && params.edge_density <= 1.0))
        throw std::invalid_argument("edge_density must lie in (0,1]");
    if (!(params.lift_fraction >= 0.0 && params.lift_fraction <= 1.0))
        throw std::invalid_argument("lift_fraction must lie in [0,1]");
    if (!(params.cost_min <= params.cost_max))
        throw std::invalid_argument("cost range is empty");

    const std::size_t n = params.nodes;
    std::mt19937_64 rng(params.seed);
    std::uniform_real_distribution<double> cost(params.cost_min, params.cost_max);

    const std::size_t all_pairs = n * (n - 1) / 2;
    const auto wanted = static_cast<std::size_t>(
        std::llround(params.edge_density * static_cast<double>(all_pairs)));
    const std::size_t target = std::min(all_pairs, std::max(n >= 1 ? n - 1 : 0, wanted));

    // Random spanning tree, then extra pairs in shuffled order.
    std::unordered_set<std::uint64_t> used;
    const auto key = [n](std::size_t u, std::size_t v) {
        return static_cast<std::uint64_t>(u) * n + v;
    };
    const auto mark = [&](std::size_t u, std::size_t v) { used.insert(key(u, v)); };
    const auto is_used = [&](std::size_t u, std::size_t v) { return used.contains(key(u, v)); };

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(target);
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        const auto u = pick(rng);
        edges.emplace_back(u, v);
        mark(u, v);
    }
    if (edges.size() < target) {
        std::vector<std::pair<std::size_t, std::size_t>> pool;
        pool.reserve(all_pairs);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (!is_used(u, v))
                    pool.emplace_back(u, v);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (std::size_t i = 0; edges.size() < target && i < pool.size(); ++i) {
            edges.push_back(pool[i]);
            mark(pool[i].first, pool[i].second);
        }
    }

    graph g(n, edges);

    // Lifted edges among pairs at hop distance 2..3.
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t u = 0; u < n; ++u) {
        const auto dist = graph_distances(g, u, 3);
        for (std::size_t v = u + 1; v < n; ++v)
            if (dist[v] != unreachable && dist[v] >= 2)
                candidates.emplace_back(u, v);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    const auto lift_count = static_cast<std::size_t>(
        params.lift_fraction * static_cast<double>(candidates.size()));
    candidates.resize(lift_count);
    std::sort(candidates.begin(), candidates.end());

    std::vector<double> costs;
    costs.reserve(g.edge_count() + candidates.size());
    for (std::size_t e = 0; e < g.edge_count() + candidates.size(); ++e)
        costs.push_back(cost(rng));

    return lmp_instance(std::move(g), std::move(candidates), std::move(costs));
}

} // namespace lmc
