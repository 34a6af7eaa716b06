#include <algorithm>
#include <chrono>
#include <limits>
#include <queue>
#include <stdexcept>

#include "lmc/solvers.hpp"

namespace lmc {

namespace {

constexpr std::size_t no_component = std::numeric_limits<std::size_t>::max();

// Local search state shared by all update_bipartition calls of one solve.
class klj_engine {
public:
    klj_engine(const lmp_instance& inst, const partition& init)
        : inst_(inst),
          g_(inst.base_graph()),
          comp_of_(init.labels()),
          members_(init.block_count()),
          side_(inst.node_count(), 0),
          moved_(inst.node_count(), 0),
          cost_own_(inst.node_count(), 0.0),
          cost_other_(inst.node_count(), 0.0),
          boundary_degree_(inst.node_count(), 0),
          stamp_(inst.node_count(), 0),
          piece_(inst.node_count(), no_component) {
        for (std::size_t v = 0; v < comp_of_.size(); ++v)
            members_[comp_of_[v]].push_back(v);
        active_.assign(members_.size(), 1);
        next_active_.assign(members_.size(), 0);
    }

    solve_report run(const klj_options& options) {
        solve_report report;
        while (report.iterations < options.max_iterations) {
            ++report.iterations;
            bool changed = false;
            next_active_.assign(members_.size(), 0);

            // Pairs of G-neighboring components, processed in ascending order.
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (const auto& [u, v] : g_.edges()) {
                const auto a = comp_of_[u], b = comp_of_[v];
                if (a != b)
                    pairs.emplace_back(std::min(a, b), std::max(a, b));
            }
            std::sort(pairs.begin(), pairs.end());
            pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

            for (const auto& [a, b] : pairs) {
                if (members_[a].empty() || members_[b].empty())
                    continue;
                if (active_[a] || active_[b])
                    changed |= update_bipartition(a, b, report.trace);
            }
            for (std::size_t a = 0; a < members_.size(); ++a) {
                if (members_[a].empty() || !active_[a])
                    continue;
                while (update_bipartition(a, no_component, report.trace))
                    changed = true;
            }

            std::swap(active_, next_active_);
            if (!changed)
                break;
            report.reached_iteration_cap = report.iterations == options.max_iterations;
        }
        report.result = partition(std::move(comp_of_));
        return report;
    }

private:
    // One round of the bipartition refinement between components a and b,
    // with b == no_component meaning moves into a fresh component. Returns
    // true iff a transformation was committed.
    bool update_bipartition(std::size_t a, std::size_t b, std::vector<solve_step>& trace) {
        const bool to_new = b == no_component;
        auto& A = members_[a];
        if (A.empty())
            return false;
        static const std::vector<std::size_t> empty_members;
        const auto& B = to_new ? empty_members : members_[b];

        std::vector<std::size_t> nodes;
        nodes.reserve(A.size() + B.size());
        for (const auto v : A) {
            side_[v] = 1;
            nodes.push_back(v);
        }
        for (const auto v : B) {
            side_[v] = 2;
            nodes.push_back(v);
        }

        // Boundary degrees w.r.t. G and the join cost over E u F.
        double join_cost = 0.0;
        bool adjacent = false;
        for (const auto v : nodes) {
            std::size_t deg = 0;
            double own = 0.0, other = 0.0;
            const auto s = side_[v];
            for (const auto& inc : inst_.incident(v)) {
                const auto t = side_[inc.node];
                if (t == 0)
                    continue;
                const double c = inst_.cost(inc.edge);
                if (t == s)
                    own += c;
                else {
                    other += c;
                    if (s == 1)
                        join_cost += c;
                    if (inc.edge < inst_.base_edge_count())
                        ++deg;
                }
            }
            cost_own_[v] = own;
            cost_other_[v] = other;
            boundary_degree_[v] = deg;
            moved_[v] = 0;
            if (deg > 0)
                adjacent = true;
        }

        if (!to_new && !adjacent) {
            cleanup(nodes);
            return false;
        }

        // Greedy sequence of elementary moves, each node at most once.
        // Deltas assume blocks stay whole; disconnection is priced at commit.
        using heap_entry = std::pair<double, std::pair<std::size_t, std::uint64_t>>;
        std::priority_queue<heap_entry, std::vector<heap_entry>, std::greater<>> heap;
        auto push_candidate = [&](std::size_t v) {
            if (moved_[v])
                return;
            if (!eligible(v, to_new))
                return;
            heap.push({cost_own_[v] - cost_other_[v], {v, ++stamp_[v]}});
        };
        for (const auto v : nodes)
            push_candidate(v);

        std::vector<std::size_t> sequence;
        sequence.reserve(nodes.size());
        double cumulative = 0.0, best_prefix_delta = 0.0;
        std::size_t best_prefix = 0;
        while (!heap.empty()) {
            const auto [delta, key] = heap.top();
            heap.pop();
            const auto [v, stamp] = key;
            if (stamp != stamp_[v] || moved_[v] || !eligible(v, to_new))
                continue;

            const auto from = side_[v];
            const auto to = from == 1 ? 2 : 1;
            side_[v] = static_cast<char>(to);
            moved_[v] = 1;
            sequence.push_back(v);
            cumulative += delta;
            if (cumulative < best_prefix_delta) {
                best_prefix_delta = cumulative;
                best_prefix = sequence.size();
            }

            for (const auto& inc : inst_.incident(v)) {
                const auto u = inc.node;
                const auto t = side_[u];
                if (t == 0 || moved_[u])
                    continue;
                const double c = inst_.cost(inc.edge);
                if (t == from) {
                    cost_own_[u] -= c;
                    cost_other_[u] += c;
                    if (inc.edge < inst_.base_edge_count())
                        ++boundary_degree_[u];
                } else {
                    cost_own_[u] += c;
                    cost_other_[u] -= c;
                    if (inc.edge < inst_.base_edge_count())
                        --boundary_degree_[u];
                }
                push_candidate(u);
            }
        }

        // Candidate transformations: best prefix (exact, with splits) and
        // complete join (exact by construction). Executed only when the
        // recomputed delta is strictly negative.
        double prefix_delta = 0.0;
        std::vector<std::size_t> piece_nodes;
        std::size_t piece_count = 0;
        if (best_prefix > 0) {
            for (const auto v : nodes)
                side_[v] = 1;
            for (const auto v : B)
                side_[v] = 2;
            for (std::size_t i = 0; i < best_prefix; ++i)
                side_[sequence[i]] = side_[sequence[i]] == 1 ? 2 : 1;
            piece_count = split_sides(nodes, piece_nodes);
            for (const auto v : nodes) {
                const auto orig = is_member_of_a(v, a) ? 1 : 2;
                for (const auto& inc : inst_.incident(v)) {
                    const auto u = inc.node;
                    if (u < v || side_[u] == 0)
                        continue;
                    const auto orig_u = is_member_of_a(u, a) ? 1 : 2;
                    const bool cut_before = orig != orig_u;
                    const bool cut_after = piece_[v] != piece_[u];
                    if (cut_before != cut_after)
                        prefix_delta += cut_after ? inst_.cost(inc.edge) : -inst_.cost(inc.edge);
                }
            }
        }

        const double join_delta = -join_cost;
        const bool join_ok = !to_new && adjacent && join_delta < 0.0 &&
                             (best_prefix == 0 || join_delta <= prefix_delta);
        const bool prefix_ok = !join_ok && best_prefix > 0 && prefix_delta < 0.0;

        bool committed = false;
        if (join_ok) {
            for (const auto v : members_[b])
                comp_of_[v] = a;
            members_[a].insert(members_[a].end(), members_[b].begin(), members_[b].end());
            members_[b].clear();
            mark_changed(a);
            mark_changed(b);
            trace.push_back({step_kind::join, join_delta});
            committed = true;
        } else if (prefix_ok) {
            commit_pieces(a, b, nodes, piece_count);
            trace.push_back({to_new ? step_kind::new_component : step_kind::move_nodes,
                             prefix_delta});
            committed = true;
        }

        cleanup(nodes);
        return committed;
    }

    bool eligible(std::size_t v, bool to_new) const {
        if (to_new)
            return side_[v] == 1; // any node of a may start a new component
        return boundary_degree_[v] > 0;
    }

    bool is_member_of_a(std::size_t v, std::size_t a) const { return comp_of_[v] == a; }

    // Connected pieces of each side under E-edges; fills piece_ with dense
    // piece ids (side-1 pieces first), returns the piece count.
    std::size_t split_sides(const std::vector<std::size_t>& nodes,
                            std::vector<std::size_t>& stack) {
        std::size_t next_piece = 0;
        for (const auto v : nodes)
            piece_[v] = no_component;
        for (const char wanted : {1, 2}) {
            for (const auto root : nodes) {
                if (side_[root] != wanted || piece_[root] != no_component)
                    continue;
                const auto id = next_piece++;
                piece_[root] = id;
                stack.assign(1, root);
                while (!stack.empty()) {
                    const auto v = stack.back();
                    stack.pop_back();
                    for (const auto& nb : g_.neighbors(v)) {
                        if (side_[nb.node] == wanted && piece_[nb.node] == no_component) {
                            piece_[nb.node] = id;
                            stack.push_back(nb.node);
                        }
                    }
                }
            }
        }
        return next_piece;
    }

    // Rewrites comp_of_/members_ from piece_: the piece holding the lowest
    // node id of side 1 keeps id a, of side 2 keeps id b; the rest are fresh.
    void commit_pieces(std::size_t a, std::size_t b, const std::vector<std::size_t>& nodes,
                       std::size_t piece_count) {
        std::vector<std::size_t> piece_comp(piece_count, no_component);
        std::vector<std::size_t> sorted(nodes);
        std::sort(sorted.begin(), sorted.end());

        bool a_taken = false, b_taken = false;
        for (const auto v : sorted) {
            auto& target = piece_comp[piece_[v]];
            if (target != no_component)
                continue;
            if (side_[v] == 1 && !a_taken) {
                target = a;
                a_taken = true;
            } else if (side_[v] == 2 && b != no_component && !b_taken) {
                target = b;
                b_taken = true;
            } else {
                target = fresh_component();
            }
        }

        members_[a].clear();
        if (b != no_component)
            members_[b].clear();
        for (const auto v : sorted) {
            comp_of_[v] = piece_comp[piece_[v]];
            members_[comp_of_[v]].push_back(v);
        }
        mark_changed(a);
        if (b != no_component)
            mark_changed(b);
        for (const auto c : piece_comp)
            mark_changed(c);
    }

    std::size_t fresh_component() {
        members_.emplace_back();
        active_.push_back(1);
        next_active_.push_back(1);
        return members_.size() - 1;
    }

    void mark_changed(std::size_t c) {
        active_[c] = 1;
        next_active_[c] = 1;
    }

    void cleanup(const std::vector<std::size_t>& nodes) {
        for (const auto v : nodes)
            side_[v] = 0;
    }

    const lmp_instance& inst_;
    const graph& g_;
    std::vector<std::size_t> comp_of_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<char> active_, next_active_;

    // per-call scratch, node-indexed
    std::vector<char> side_;  // 0 = outside, 1 = side of a, 2 = side of b
    std::vector<char> moved_;
    std::vector<double> cost_own_, cost_other_;
    std::vector<std::size_t> boundary_degree_;
    std::vector<std::uint64_t> stamp_;
    std::vector<std::size_t> piece_;
};

} // namespace

solve_report klj(const lmp_instance& inst, const partition& init, const klj_options& options) {
    const auto start = std::chrono::steady_clock::now();
    if (init.size() != inst.node_count())
        throw std::invalid_argument("klj: init partition size does not match instance");
    if (!is_decomposition(inst.base_graph(), init))
        throw std::invalid_argument("klj: init partition is not a decomposition of G");

    klj_engine engine(inst, init);
    auto report = engine.run(options);
    report.result = canonicalize(inst.base_graph(), report.result);
    report.objective = objective(inst, report.result);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace lmc
