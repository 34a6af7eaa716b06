#include <doctest.h>

#include <random>
#include <sstream>

#include "lmc/generators.hpp"
#include "lmc/io.hpp"
#include "support/oracles.hpp"

using namespace lmc;

namespace {

lmp_instance parse(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

bool same_instance(const lmp_instance& a, const lmp_instance& b) {
    return a.node_count() == b.node_count() &&
           a.base_graph().edges() == b.base_graph().edges() &&
           a.lifted_edges() == b.lifted_edges() && a.costs() == b.costs();
}

} // namespace

TEST_CASE("instance parsing") {
    const auto inst = parse("LMP 1\nNODES 3\nEDGE 0 1 3.0\nEDGE 1 2 -1.0\n");
    CHECK(inst.node_count() == 3);
    CHECK(inst.base_edge_count() == 2);
    CHECK(inst.lifted_edge_count() == 0);
    CHECK(inst.cost(0) == 3.0);
    CHECK(inst.cost(1) == -1.0);
}

TEST_CASE("instance parsing: comments and blank lines") {
    const auto inst = parse("# header\nLMP 1\n\nNODES 2\nEDGE 0 1 1.5 # trailing\n");
    CHECK(inst.base_edge_count() == 1);
    CHECK(inst.cost(0) == 1.5);
}

TEST_CASE("instance parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse("LMP 2\n"), "line 1: expected magic 'LMP 1'", parse_error);
    CHECK_THROWS_AS(parse("LMP 1\nEDGE 0 1 1.0\n"), parse_error);
    CHECK_THROWS_AS(parse("LMP 1\nNODES 2\nEDGE 0 2 1.0\n"), parse_error);
    CHECK_THROWS_AS(parse("LMP 1\nNODES 2\nEDGE 1 0 1.0\n"), parse_error);
    CHECK_THROWS_AS(parse("LMP 1\nNODES 2\nEDGE 0 1 nan\n"), parse_error);
    CHECK_THROWS_AS(parse("LMP 1\nNODES 2\nEDGE 0 1 1.0\nEDGE 0 1 2.0\n"), parse_error);
    // LIFT duplicating an EDGE pair
    CHECK_THROWS_AS(parse("LMP 1\nNODES 2\nEDGE 0 1 1.0\nLIFT 0 1 2.0\n"), parse_error);
    CHECK_THROWS_AS(parse(""), parse_error);
}

TEST_CASE("instance round trip on random instances") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 100; ++round) {
        random_instance_params params;
        params.nodes = 2 + rng() % 20;
        params.edge_density = 0.3;
        params.lift_fraction = 0.5;
        params.seed = rng();
        const auto inst = make_random_instance(params);

        std::ostringstream out;
        write_instance(out, inst);
        std::istringstream in(out.str());
        const auto again = read_instance(in);
        CHECK(same_instance(inst, again));
    }
}

TEST_CASE("partition files") {
    std::istringstream in("0 0\n1 0\n2 1\n");
    CHECK(read_partition(in) == partition({0, 0, 1}));

    std::istringstream canonical("0 5\n1 5\n2 9\n");
    CHECK(read_partition(canonical) == partition({0, 0, 1}));

    std::istringstream missing("0 0\n2 1\n");
    CHECK_THROWS_AS(read_partition(missing), parse_error);

    std::istringstream twice("0 0\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_partition(twice), parse_error);

    std::istringstream malformed("0\n");
    CHECK_THROWS_AS(read_partition(malformed), parse_error);

    std::mt19937_64 rng(42);
    for (int round = 0; round < 50; ++round) {
        const auto p = testing::random_partition(rng, 1 + rng() % 30, 1 + rng() % 5);
        std::ostringstream out;
        write_partition(out, p);
        std::istringstream back(out.str());
        CHECK(read_partition(back) == p);
    }
}

TEST_CASE("label files") {
    std::istringstream in("0\n1\n1\n");
    CHECK(read_labels(in) == edge_labeling{0, 1, 1});

    std::istringstream bad("0\n2\n");
    CHECK_THROWS_AS(read_labels(bad), parse_error);

    std::ostringstream out;
    write_labels(out, {1, 0, 1});
    CHECK(out.str() == "1\n0\n1\n");
}

TEST_CASE("probability grids") {
    std::istringstream in("0 0.5\n1 0.25\n");
    const auto values = read_probability_grid(in, 4);
    CHECK(values == std::vector<double>{0.0, 0.5, 1.0, 0.25});

    std::istringstream short_file("0 0.5");
    CHECK_THROWS_AS(read_probability_grid(short_file, 4), parse_error);

    std::istringstream out_of_range("2.0");
    CHECK_THROWS_AS(read_probability_grid(out_of_range, 1), parse_error);
}

TEST_CASE("trace csv") {
    solve_report report;
    report.trace.push_back({step_kind::contract, -3.0});
    report.trace.push_back({step_kind::join, -0.5});
    std::ostringstream out;
    write_trace_csv(out, report);
    CHECK(out.str() == "step,kind,delta\n0,contract,-3\n1,join,-0.5\n");
}

TEST_CASE("grid generator combinatorics") {
    lifting_params params;
    params.d_star = 1;

    SUBCASE("2x2 grid: 4 nodes, 4 edges") {
        const std::vector<double> probs(4, 0.5);
        const auto inst = make_grid_instance(2, 2, probs, params);
        CHECK(inst.node_count() == 4);
        CHECK(inst.base_edge_count() == 4);
    }
    SUBCASE("3x1 strip: mean probabilities") {
        const std::vector<double> probs{0.0, 1.0, 0.0};
        const auto inst = make_grid_instance(3, 1, probs, params);
        REQUIRE(inst.base_edge_count() == 2);
        // cost of p = 0.5 at p* = 0.5 is 0
        CHECK(inst.cost(0) == 0.0);
        CHECK(inst.cost(1) == 0.0);
    }
    SUBCASE("edge count formula W(H-1) + H(W-1)") {
        for (const auto [w, h] : {std::pair<std::size_t, std::size_t>{5, 3}, {1, 7}, {4, 4}}) {
            const std::vector<double> probs(w * h, 0.3);
            const auto inst = make_grid_instance(w, h, probs, params);
            CHECK(inst.base_edge_count() == w * (h - 1) + h * (w - 1));
        }
    }
    SUBCASE("dimension mismatch") {
        const std::vector<double> probs(3, 0.5);
        CHECK_THROWS(make_grid_instance(2, 2, probs, params));
    }
}

TEST_CASE("random generator") {
    random_instance_params params;
    params.nodes = 12;
    params.edge_density = 0.4;
    params.lift_fraction = 0.5;
    params.seed = 99;

    const auto a = make_random_instance(params);
    const auto b = make_random_instance(params);
    CHECK(same_instance(a, b));

    params.seed = 100;
    const auto c = make_random_instance(params);
    CHECK_FALSE(same_instance(a, c));

    CHECK(connected_components(a.base_graph()).block_count() == 1);

    SUBCASE("single node") {
        random_instance_params tiny;
        tiny.nodes = 1;
        const auto inst = make_random_instance(tiny);
        CHECK(inst.total_edge_count() == 0);
    }
    SUBCASE("full density, no lifting: complete-graph MP") {
        random_instance_params full;
        full.nodes = 7;
        full.edge_density = 1.0;
        full.lift_fraction = 0.0;
        const auto inst = make_random_instance(full);
        CHECK(inst.base_edge_count() == 21);
        CHECK(inst.lifted_edge_count() == 0);
    }
    SUBCASE("invalid parameters") {
        random_instance_params bad;
        bad.nodes = 0;
        CHECK_THROWS(make_random_instance(bad));
        bad = {};
        bad.edge_density = 0.0;
        CHECK_THROWS(make_random_instance(bad));
        bad = {};
        bad.cost_min = 2.0;
        bad.cost_max = 1.0;
        CHECK_THROWS(make_random_instance(bad));
    }
}
