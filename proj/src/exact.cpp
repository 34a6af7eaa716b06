#include <chrono>

#include "lmc/solvers.hpp"
#include "lmc/union_find.hpp"

namespace lmc {

// Enumerates set partitions as restricted growth strings: a[0] = 0 and
// a[i] <= 1 + max(a[0..i-1]). RGS are exactly the canonical label vectors,
// and lexicographic enumeration means the first minimizer kept is the
// canonically smallest one.
solve_report solve_exact(const lmp_instance& inst, const exact_options& options) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = inst.node_count();
    if (n > options.max_nodes)
        throw std::invalid_argument("solve_exact: " + std::to_string(n) +
                                    " nodes exceed the cap of " +
                                    std::to_string(options.max_nodes));

    solve_report report;
    if (n == 0) {
        report.result = partition{};
        return report;
    }

    std::vector<std::size_t> labels(n, 0), prefix_max(n, 0);
    std::vector<std::size_t> best_labels;
    double best = 0.0;

    const auto& g = inst.base_graph();
    for (;;) {
        const std::size_t block_count = prefix_max[n - 1] + 1;
        union_find uf(n);
        for (const auto& [u, v] : g.edges())
            if (labels[u] == labels[v])
                uf.unite(u, v);
        if (uf.set_count() == block_count) {
            ++report.iterations;
            double obj = 0.0;
            for (std::size_t e = 0; e < inst.total_edge_count(); ++e) {
                const auto [u, v] = inst.endpoints(e);
                if (labels[u] != labels[v])
                    obj += inst.cost(e);
            }
            if (best_labels.empty() || obj < best) {
                best = obj;
                best_labels = labels;
            }
        }

        // next RGS
        std::size_t i = n;
        while (i-- > 1) {
            if (labels[i] <= prefix_max[i - 1]) {
                ++labels[i];
                prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
                for (std::size_t j = i + 1; j < n; ++j) {
                    labels[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
        }
        if (i == 0)
            break;
    }

    report.result = partition(std::move(best_labels));
    report.objective = objective(inst, report.result);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace lmc
