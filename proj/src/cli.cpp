#include "lmc/cli.hpp"

#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "lmc/generators.hpp"
#include "lmc/io.hpp"
#include "lmc/lifting.hpp"
#include "lmc/metrics.hpp"
#include "lmc/solvers.hpp"

namespace lmc {

namespace {

struct gen_grid_args {
    std::size_t width = 0, height = 0;
    std::string probs_path, out_path;
    lifting_params params;
};

struct gen_random_args {
    random_instance_params params;
    std::string out_path;
};

struct solve_args {
    std::string algo;
    std::string in_path, out_path;
    std::string init_path, trace_path, labels_path;
    std::size_t exact_cap = 10;
    std::size_t klj_cap = 100;
};

struct check_args {
    std::string in_path, labels_path;
};

struct eval_args {
    std::string metric;
    std::string pred_path, truth_path;
};

int do_gen_grid(const gen_grid_args& args, std::ostream& out) {
    const auto probs =
        read_probability_grid_file(args.probs_path, args.width * args.height);
    const auto inst = make_grid_instance(args.width, args.height, probs, args.params);
    write_instance_file(args.out_path, inst);
    out << "nodes " << inst.node_count() << " edges " << inst.base_edge_count()
        << " lifted " << inst.lifted_edge_count() << "\n";
    return exit_ok;
}

int do_gen_random(const gen_random_args& args, std::ostream& out) {
    const auto inst = make_random_instance(args.params);
    write_instance_file(args.out_path, inst);
    out << "nodes " << inst.node_count() << " edges " << inst.base_edge_count()
        << " lifted " << inst.lifted_edge_count() << "\n";
    return exit_ok;
}

int do_solve(const solve_args& args, std::ostream& out, std::ostream& err) {
    const auto inst = read_instance_file(args.in_path);

    std::optional<solve_report> report;
    if (args.algo == "gaec") {
        report = gaec(inst);
    } else if (args.algo == "exact") {
        report = solve_exact(inst, {args.exact_cap});
    } else if (args.algo == "klj" || args.algo == "gaec-klj") {
        partition init;
        if (args.algo == "klj" && !args.init_path.empty())
            init = read_partition_file(args.init_path);
        else
            init = gaec(inst).result;
        report = klj(inst, init, {args.klj_cap});
    } else {
        err << "unknown algorithm '" << args.algo << "'\n";
        return exit_usage;
    }

    if (report->reached_iteration_cap)
        err << "note: iteration cap reached after " << report->iterations
            << " iterations\n";

    write_partition_file(args.out_path, report->result);
    if (!args.trace_path.empty())
        write_trace_csv_file(args.trace_path, *report);
    if (!args.labels_path.empty())
        write_labels_file(args.labels_path, labeling_from_partition(inst, report->result));
    out << "objective " << format_double(report->objective) << "\n";
    return exit_ok;
}

int do_check(const check_args& args, std::ostream& out) {
    const auto inst = read_instance_file(args.in_path);
    const auto labels = read_labels_file(args.labels_path);
    if (labels.size() != inst.total_edge_count())
        throw parse_error(labels.size(), "labels file has " + std::to_string(labels.size()) +
                                             " entries, instance has " +
                                             std::to_string(inst.total_edge_count()) +
                                             " edges");
    const auto report = check_feasibility(inst, labels);
    out << report.describe(inst) << "\n";
    return report.ok() ? exit_ok : exit_infeasible;
}

int do_eval(const eval_args& args, std::ostream& out, std::ostream& err) {
    const auto pred = read_partition_file(args.pred_path);
    const auto truth = read_partition_file(args.truth_path);
    if (args.metric == "vi") {
        const auto vi = variation_of_information(truth, pred);
        out << format_double(vi.total) << " " << format_double(vi.false_cut) << " "
            << format_double(vi.false_join) << "\n";
        return exit_ok;
    }
    if (args.metric == "ri") {
        out << format_double(rand_index(truth, pred)) << "\n";
        return exit_ok;
    }
    err << "unknown metric '" << args.metric << "'\n";
    return exit_usage;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"minimum cost (lifted) multicut toolbox"};
    app.require_subcommand(1);

    gen_grid_args grid;
    auto* gen_grid = app.add_subcommand(
        "gen-grid", "build a grid instance from a pixel probability map");
    gen_grid->add_option("--width", grid.width, "grid width")->required();
    gen_grid->add_option("--height", grid.height, "grid height")->required();
    gen_grid->add_option("--probs", grid.probs_path, "probability map file")->required();
    gen_grid->add_option("--pstar", grid.params.p_star, "prior cut probability");
    gen_grid->add_option("--dstar", grid.params.d_star, "maximum lifting distance");
    gen_grid->add_option("--clamp-eps", grid.params.clamp_eps, "probability clamp");
    gen_grid->add_flag("--no-ball-restriction",
                       [&grid](std::size_t count) {
                           grid.params.restrict_search_to_ball = count == 0;
                       },
                       "search max-probability paths in the whole graph");
    gen_grid->add_option("--out", grid.out_path, "output instance file")->required();

    gen_random_args rnd;
    auto* gen_random =
        app.add_subcommand("gen-random", "build a seeded random instance");
    gen_random->add_option("--nodes", rnd.params.nodes, "node count")->required();
    gen_random->add_option("--density", rnd.params.edge_density, "edge density in (0,1]")
        ->required();
    gen_random->add_option("--seed", rnd.params.seed, "random seed")->required();
    gen_random->add_option("--lift-fraction", rnd.params.lift_fraction,
                           "fraction of distance-2..3 pairs lifted");
    gen_random->add_option("--cost-min", rnd.params.cost_min, "minimum edge cost");
    gen_random->add_option("--cost-max", rnd.params.cost_max, "maximum edge cost");
    gen_random->add_option("--out", rnd.out_path, "output instance file")->required();

    solve_args solve;
    auto* solve_cmd = app.add_subcommand("solve", "run a solver on an instance");
    solve_cmd->add_option("--algo", solve.algo, "gaec | klj | gaec-klj | exact")
        ->required()
        ->check(CLI::IsMember({"gaec", "klj", "gaec-klj", "exact"}));
    solve_cmd->add_option("--in", solve.in_path, "instance file")->required();
    solve_cmd->add_option("--init", solve.init_path,
                          "initial partition (klj only; defaults to the gaec result)");
    solve_cmd->add_option("--out", solve.out_path, "output partition file")->required();
    solve_cmd->add_option("--trace", solve.trace_path, "write per-step trace CSV");
    solve_cmd->add_option("--emit-labels", solve.labels_path, "write the edge labeling");
    solve_cmd->add_option("--exact-cap", solve.exact_cap, "node cap for --algo exact");
    solve_cmd->add_option("--klj-cap", solve.klj_cap, "outer iteration cap for klj");

    check_args check;
    auto* check_cmd =
        app.add_subcommand("check", "check a labeling for lifted-multicut feasibility");
    check_cmd->add_option("--in", check.in_path, "instance file")->required();
    check_cmd->add_option("--labels", check.labels_path, "labeling file")->required();

    eval_args eval;
    auto* eval_cmd = app.add_subcommand("eval", "compare two partitions");
    eval_cmd->add_option("--metric", eval.metric, "vi | ri")
        ->required()
        ->check(CLI::IsMember({"vi", "ri"}));
    eval_cmd->add_option("--pred", eval.pred_path, "predicted partition")->required();
    eval_cmd->add_option("--truth", eval.truth_path, "reference partition")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (gen_grid->parsed())
            return do_gen_grid(grid, out);
        if (gen_random->parsed())
            return do_gen_random(rnd, out);
        if (solve_cmd->parsed()) {
            if (!solve.init_path.empty() && solve.algo != "klj") {
                err << "--init is only valid with --algo klj\n";
                return exit_usage;
            }
            return do_solve(solve, out, err);
        }
        if (check_cmd->parsed())
            return do_check(check, out);
        if (eval_cmd->parsed())
            return do_eval(eval, out, err);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace lmc
