#include <doctest.h>

#include <random>

#include "lmc/graph.hpp"
#include "lmc/union_find.hpp"
#include "support/oracles.hpp"

using namespace lmc;

TEST_CASE("build: path graph") {
    graph g(3, {{0, 1}, {1, 2}});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.edge_endpoints(0) == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(g.find_edge(2, 1) == 1);
    CHECK_FALSE(g.find_edge(0, 2).has_value());
}

TEST_CASE("build: single node, no edges") {
    graph g(1, {});
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("build: edges normalized to u < v") {
    graph g(3, {{2, 0}});
    CHECK(g.edge_endpoints(0) == std::pair<std::size_t, std::size_t>{0, 2});
}

TEST_CASE("build: construction errors are distinct") {
    CHECK_THROWS_AS(graph(3, {{0, 1}, {0, 1}}), duplicate_edge_error);
    CHECK_THROWS_AS(graph(3, {{0, 1}, {1, 0}}), duplicate_edge_error);
    CHECK_THROWS_AS(graph(3, {{1, 1}}), self_loop_error);
    CHECK_THROWS_AS(graph(3, {{0, 3}}), node_out_of_range_error);
}

TEST_CASE("distances: path with and without cap") {
    graph g(3, {{0, 1}, {1, 2}});
    auto d = graph_distances(g, 0, 2);
    CHECK(d == std::vector<std::size_t>{0, 1, 2});
    d = graph_distances(g, 0, 1);
    CHECK(d[2] == unreachable);
    CHECK_THROWS_AS(graph_distances(g, 3, 1), node_out_of_range_error);
}

TEST_CASE("distances: disconnected pair") {
    graph g(2, {});
    const auto d = graph_distances(g, 0);
    CHECK(d[1] == unreachable);
}

TEST_CASE("connected components") {
    graph path(3, {{0, 1}, {1, 2}});
    CHECK(connected_components(path).block_count() == 1);

    const std::vector<std::size_t> subset{0, 2};
    CHECK(connected_components(path, subset).block_count() == 2);

    CHECK(connected_components(path, std::span<const std::size_t>{}).size() == 0);

    graph two(4, {{0, 1}, {2, 3}});
    CHECK(connected_components(two).block_count() == 2);
}

TEST_CASE("is_decomposition") {
    graph path(3, {{0, 1}, {1, 2}});
    CHECK(is_decomposition(path, partition::one_block(3)));
    CHECK(is_decomposition(path, partition::singletons(3)));
    CHECK_FALSE(is_decomposition(path, partition({0, 1, 0})));
    CHECK_THROWS(is_decomposition(path, partition::singletons(4)));
}

TEST_CASE("union_find basics") {
    union_find uf(4);
    for (std::size_t v = 0; v < 4; ++v)
        CHECK(uf.find(v) == v);
    CHECK(uf.unite(0, 1));
    CHECK(uf.find(0) == uf.find(1));
    CHECK_FALSE(uf.unite(1, 0));
    CHECK(uf.unite(1, 2));
    CHECK(uf.find(0) == uf.find(2));
    CHECK(uf.set_count() == 2);
}

TEST_CASE("partition canonical form") {
    partition p({5, 5, 9, 5});
    CHECK(p.labels() == std::vector<std::size_t>{0, 0, 1, 0});
    CHECK(p.block_count() == 2);

    auto q = p;
    q.canonicalize();
    CHECK(q == p);

    CHECK(partition({0, 0, 1}) == partition({7, 7, 3}));
}

TEST_CASE("random graphs: components are decompositions, distances symmetric") {
    std::mt19937_64 rng(20240817);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 2 + rng() % 20;
        const auto g = testing::random_connected_graph(rng, n, rng() % (2 * n));

        CHECK(is_decomposition(g, connected_components(g)));

        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int pair = 0; pair < 100; ++pair) {
            const auto u = pick(rng), v = pick(rng);
            CHECK(graph_distances(g, u)[v] == graph_distances(g, v)[u]);
        }
    }
}
