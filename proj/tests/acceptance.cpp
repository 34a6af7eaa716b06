// Acceptance suite: one self-contained check per release criterion, each
// printed as a PASS/FAIL line. Returns nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lmc/generators.hpp"
#include "lmc/lifting.hpp"
#include "lmc/metrics.hpp"
#include "lmc/solvers.hpp"
#include "support/oracles.hpp"

using namespace lmc;

namespace {

struct harness {
    int failures = 0;

    void run(const std::string& name, const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string message;
        try {
            body();
        } catch (const std::exception& e) {
            message = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (message.empty()) {
            std::printf("[PASS] %-28s (%.2fs)\n", name.c_str(), seconds);
        } else {
            std::printf("[FAIL] %-28s (%.2fs) %s\n", name.c_str(), seconds, message.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

void require(bool condition, const std::string& message) {
    if (!condition)
        throw std::runtime_error(message);
}

void require_budget(double seconds, double budget, const std::string& what) {
    require(seconds < budget, what + " took " + std::to_string(seconds) +
                                  "s, budget " + std::to_string(budget) + "s");
}

lmp_instance suite_instance(std::mt19937_64& rng, std::size_t max_nodes) {
    random_instance_params params;
    params.nodes = 2 + rng() % (max_nodes - 1);
    params.edge_density = 0.25 + 0.5 * (static_cast<double>(rng() % 100) / 100.0);
    params.lift_fraction = 0.4;
    params.seed = rng();
    return make_random_instance(params);
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criteria ---------------------------------------------------------

// solve_exact lower-bounds GAEC-KLj on seeded random instances, and the
// three worked solver instances hit the brute-force optimum exactly.
void oracle_agreement() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    for (int round = 0; round < 220; ++round) {
        const auto inst = suite_instance(rng, 8);
        const auto exact = solve_exact(inst);
        const auto heuristic = klj(inst, gaec(inst).result);
        require(exact.objective <= heuristic.objective,
                "exact above heuristic on round " + std::to_string(round));
    }

    {
        const lmp_instance inst(graph(3, {{0, 1}, {1, 2}}), {}, {3.0, -1.0});
        require(gaec(inst).objective == solve_exact(inst).objective &&
                    solve_exact(inst).objective == -1.0,
                "gaec 3-path optimum mismatch");
    }
    {
        const lmp_instance inst(graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), {},
                                {1.0, 2.0, 0.5, 1.5});
        require(gaec(inst).objective == solve_exact(inst).objective &&
                    solve_exact(inst).objective == 0.0,
                "gaec 4-cycle optimum mismatch");
    }
    {
        const lmp_instance inst(graph(3, {{0, 1}, {1, 2}}), {}, {-1.0, 2.0});
        const auto report = klj(inst, partition({0, 0, 1}));
        require(report.objective == solve_exact(inst).objective &&
                    report.objective == -1.0,
                "klj 3-path optimum mismatch");
    }
    require_budget(elapsed_since(start), 60.0, "oracle agreement");
}

// gaec, klj and gaec-klj outputs all pass the feasibility check after
// canonicalization, over 1000 seeded random instances.
void feasibility_suite() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1002);
    for (int round = 0; round < 1000; ++round) {
        const auto inst = suite_instance(rng, 40);
        const auto greedy = gaec(inst);
        const auto local = klj(inst, partition::singletons(inst.node_count()));
        const auto combined = klj(inst, greedy.result);
        for (const auto* report : {&greedy, &local, &combined}) {
            const auto p = canonicalize(inst, report->result);
            require(check_feasibility(inst, labeling_from_partition(inst, p)).ok(),
                    "infeasible output on round " + std::to_string(round));
        }
    }
    require_budget(elapsed_since(start), 120.0, "feasibility suite");
}

// Every GAEC trace delta is negative; KLj never ends above its init; trace
// deltas sum to the objective change within 1e-6.
void descent_contracts() {
    std::mt19937_64 rng(1003);
    for (int round = 0; round < 300; ++round) {
        const auto inst = suite_instance(rng, 24);

        const auto greedy = gaec(inst);
        double initial = 0.0;
        for (std::size_t e = 0; e < inst.total_edge_count(); ++e)
            initial += inst.cost(e);
        double sum = 0.0;
        for (const auto& step : greedy.trace) {
            require(step.delta < 0.0, "non-negative gaec delta");
            sum += step.delta;
        }
        require(std::abs(greedy.objective - initial - sum) <= 1e-6,
                "gaec trace does not sum to objective change");

        const auto init = round % 2 == 0 ? greedy.result
                                         : partition::singletons(inst.node_count());
        const double init_objective = objective(inst, init);
        const auto local = klj(inst, init);
        require(local.objective <= init_objective, "klj ended above its init");
        sum = 0.0;
        for (const auto& step : local.trace)
            sum += step.delta;
        require(std::abs(local.objective - init_objective - sum) <= 1e-6,
                "klj trace does not sum to objective change");
    }
}

// The component-based feasibility verdict equals literal evaluation of the
// cycle, path and cut inequality systems on every labeling.
void constraint_system_equivalence() {
    std::mt19937_64 rng(1004);
    int instances = 0;
    while (instances < 20) {
        const std::size_t n = 3 + rng() % 3;
        const auto g = testing::random_connected_graph(rng, n, rng() % 2);
        std::vector<std::pair<std::size_t, std::size_t>> lifted;
        for (std::size_t u = 0; u < n && lifted.size() < 2; ++u)
            for (std::size_t v = u + 1; v < n && lifted.size() < 2; ++v)
                if (!g.find_edge(u, v))
                    lifted.emplace_back(u, v);
        const std::size_t total = g.edge_count() + lifted.size();
        if (total > 8)
            continue;
        ++instances;

        const lmp_instance inst(g, lifted, std::vector<double>(total, 0.0));
        const testing::inequality_oracle oracle(inst);
        for (std::uint32_t bits = 0; bits < (1u << total); ++bits) {
            edge_labeling y(total);
            for (std::size_t e = 0; e < total; ++e)
                y[e] = (bits >> e) & 1;
            require(check_feasibility(inst, y).ok() == oracle.feasible(y),
                    "verdict mismatch on instance " + std::to_string(instances));
        }
    }
}

// Geodesic join probabilities equal the exhaustive max over simple paths.
void lifting_oracle() {
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 3 + rng() % 10;
        const auto g = testing::random_connected_graph(rng, n, 4);
        std::vector<double> prob(g.edge_count());
        for (auto& p : prob)
            p = uniform(rng);

        lifting_params params;
        params.d_star = 2 + rng() % 3;
        params.restrict_search_to_ball = false;

        std::vector<double> join(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            join[e] = 1.0 - std::clamp(prob[e], params.clamp_eps, 1.0 - params.clamp_eps);

        for (const auto& f : lifted_cut_probabilities(probabilistic_graph(g, prob), params)) {
            const auto expected =
                testing::max_join_probability_brute_force(g, join, f.u, f.v);
            require(std::abs((1.0 - f.cut_prob) - expected) <= 1e-9,
                    "join probability off on round " + std::to_string(round));
        }
    }
}

// Exhaustive labeling <-> partition round trip over every decomposition of
// every graph on up to 6 nodes.
void bijection() {
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::size_t pair_count = n * (n - 1) / 2;
        std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                all_pairs.emplace_back(u, v);

        for (std::uint32_t mask = 0; mask < (1u << pair_count); ++mask) {
            std::vector<std::pair<std::size_t, std::size_t>> edges, lifted;
            for (std::size_t i = 0; i < pair_count; ++i)
                ((mask >> i) & 1 ? edges : lifted).push_back(all_pairs[i]);
            const graph g(n, edges);
            const lmp_instance inst(g, lifted, std::vector<double>(pair_count, 0.0));

            testing::for_each_partition(n, [&](const std::vector<std::size_t>& labels) {
                const partition p{std::vector<std::size_t>(labels)};
                if (!is_decomposition(g, p))
                    return;
                const auto y = labeling_from_partition(inst, p);
                require(partition_from_labeling(inst, y) == p, "round trip broke");
                require(check_feasibility(inst, y).ok(), "round trip left Y_EF");
            });
        }
    }
}

// VI split adds up exactly, VI satisfies the triangle inequality, and the
// frozen worked values reproduce exactly.
void metric_contracts() {
    std::mt19937_64 rng(1006);
    for (int round = 0; round < 1000; ++round) {
        const std::size_t n = 2 + rng() % 49;
        const auto x = testing::random_partition(rng, n, 1 + rng() % 7);
        const auto y = testing::random_partition(rng, n, 1 + rng() % 7);
        const auto z = testing::random_partition(rng, n, 1 + rng() % 7);

        const auto xy = variation_of_information(x, y);
        require(xy.total == xy.false_cut + xy.false_join, "vi split is not additive");

        const auto xz = variation_of_information(x, z).total;
        const auto yz = variation_of_information(y, z).total;
        require(xz <= xy.total + yz + 1e-9, "vi triangle inequality failed");
    }

    const partition truth({0, 0, 1, 1});
    const partition pred({0, 1, 0, 1});
    const auto vi = variation_of_information(truth, pred);
    require(vi.total == 2.0 && vi.false_cut == 1.0 && vi.false_join == 1.0,
            "worked vi example is not (2,1,1)");
    require(rand_index(truth, pred) == 2.0 / 6.0, "worked ri example is not 1/3");
}

// gaec-klj finishes a 100x100 grid MP instance and a d* = 5 lifted variant
// within the time budgets and the iteration cap.
void scale_smoke() {
    std::mt19937_64 rng(1007);
    std::uniform_real_distribution<double> uniform(0.05, 0.95);
    std::vector<double> pixels(100 * 100);
    for (auto& p : pixels)
        p = uniform(rng);

    lifting_params mp_params;
    mp_params.d_star = 1; // no lifting: plain MP
    const auto mp = make_grid_instance(100, 100, pixels, mp_params);

    auto start = std::chrono::steady_clock::now();
    const auto mp_report = klj(mp, gaec(mp).result);
    require_budget(elapsed_since(start), 60.0, "grid MP gaec-klj");
    require(!mp_report.reached_iteration_cap, "grid MP hit the klj iteration cap");
    require(check_feasibility(mp, labeling_from_partition(mp, mp_report.result)).ok(),
            "grid MP output infeasible");

    lifting_params lmp_params;
    lmp_params.d_star = 5;
    start = std::chrono::steady_clock::now();
    const auto lifted = make_grid_instance(100, 100, pixels, lmp_params);
    const auto lmp_report = klj(lifted, gaec(lifted).result);
    require_budget(elapsed_since(start), 300.0, "grid LMP5 lift + gaec-klj");
    require(!lmp_report.reached_iteration_cap, "grid LMP5 hit the klj iteration cap");
    require(check_feasibility(lifted, labeling_from_partition(lifted, lmp_report.result)).ok(),
            "grid LMP5 output infeasible");
}

// On a two-region probability grid the number of blocks never decreases as
// the cut prior grows.
void prior_trade_off() {
    // 16x8 grid, high boundary probability on the two middle columns
    const std::size_t width = 16, height = 8;
    std::vector<double> pixels(width * height, 0.05);
    for (std::size_t row = 0; row < height; ++row) {
        pixels[row * width + 7] = 0.7;
        pixels[row * width + 8] = 0.7;
    }

    std::vector<std::size_t> blocks;
    for (const double p_star : {0.1, 0.5, 0.9}) {
        lifting_params params;
        params.d_star = 1;
        params.p_star = p_star;
        const auto inst = make_grid_instance(width, height, pixels, params);
        const auto report = klj(inst, gaec(inst).result);
        blocks.push_back(report.result.block_count());
    }
    require(blocks[0] <= blocks[1] && blocks[1] <= blocks[2],
            "block counts " + std::to_string(blocks[0]) + ", " +
                std::to_string(blocks[1]) + ", " + std::to_string(blocks[2]) +
                " are not non-decreasing");
    require(blocks[0] < blocks[2], "sweep shows no trade-off at all");
}

} // namespace

int main() {
    harness h;
    h.run("oracle-agreement", oracle_agreement);
    h.run("feasibility-suite", feasibility_suite);
    h.run("descent-contracts", descent_contracts);
    h.run("constraint-equivalence", constraint_system_equivalence);
    h.run("lifting-oracle", lifting_oracle);
    h.run("bijection", bijection);
    h.run("metric-contracts", metric_contracts);
    h.run("scale-smoke", scale_smoke);
    h.run("prior-trade-off", prior_trade_off);

    if (h.failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", h.failures);
    return 1;
}
