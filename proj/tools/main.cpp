#include "solve.hpp"

#include "rdom/harness.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>

using namespace rdom;
using namespace rdom::cli;
using nlohmann::json;

namespace {

constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;
constexpr int exit_infeasible = 4;

std::string terminated(std::string text)
{
    if (! text.empty() && text.back() != '\n')
        text += '\n';
    return text;
}

void write_file(const std::string & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary);
    if (! out || ! (out << terminated(text)))
        throw UsageError("cannot write " + path);
}

struct SolveArgs {
    std::string problem;
    int k = 0;
    int j = 0;
    std::string solver = "auto";
    std::optional<std::string> graph, model, assignment, witness;
};

int run_solve(const SolveArgs & a)
{
    SolveRequest req;
    const auto problem = parse_problem(a.problem);
    if (! problem)
        throw UsageError("unknown problem \"" + a.problem + "\"");
    const auto solver = parse_class(a.solver);
    if (! solver)
        throw UsageError("unknown class \"" + a.solver + "\"");
    req.problem = *problem;
    req.solver = *solver;
    req.k = a.k;
    req.j = a.j;
    req.oracle = oracle_config_from_env();

    const auto inputs = load_inputs(a.graph, a.model, a.assignment, a.k);
    const auto out = solve(req, inputs);
    std::cerr << "solver: " << class_name(out.used) << '\n';
    if (a.witness)
        write_file(*a.witness, out.witness.dump() + '\n');
    std::cout << out.value << '\n';
    return 0;
}

struct VerifyArgs {
    std::optional<std::string> plan;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> checks;
    std::string mutation;
    std::string params;
    std::optional<int> workers;
    bool timing = false;
    std::optional<std::string> report;
};

CertificationPlan build_plan(const VerifyArgs & a)
{
    json doc;
    if (a.plan) {
        if (! a.checks.empty())
            throw PlanError("--plan and --check are exclusive");
        try {
            doc = json::parse(read_file(*a.plan));
        } catch (const json::parse_error & e) {
            throw PlanError(std::string("plan is not valid JSON: ") + e.what());
        }
    } else if (! a.checks.empty()) {
        json params = json::object();
        if (! a.params.empty()) {
            try {
                params = json::parse(a.params);
            } catch (const json::parse_error & e) {
                throw PlanError(std::string("--params is not valid JSON: ") + e.what());
            }
        }
        doc = json{{"checks", json::array()}};
        for (const auto & name : a.checks) {
            json entry{{"name", name}, {"params", params}};
            if (! a.mutation.empty())
                entry["mutation"] = a.mutation;
            doc["checks"].push_back(entry);
        }
    } else {
        if (! a.mutation.empty() || ! a.params.empty())
            throw PlanError("--mutation and --params need --check");
        doc = plan_to_json(default_plan(1));
    }
    auto plan = parse_plan(doc);
    if (a.seed)
        plan.seed = *a.seed;
    if (a.workers) {
        if (*a.workers < 1)
            throw PlanError("--workers must be positive");
        plan.workers = *a.workers;
    }
    plan.timing = plan.timing || a.timing;
    return plan;
}

int run_verify(const VerifyArgs & a)
{
    const auto plan = build_plan(a);
    const auto report = run_plan(plan);
    for (const auto & c : report.checks) {
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        if (! c.passed && ! c.replay.empty())
            std::cerr << "  replay: " << c.replay << '\n';
    }
    const auto text = report_to_json(report, plan.timing).dump(2) + '\n';
    if (a.report)
        write_file(*a.report, text);
    else
        std::cout << text;
    return report.passed() ? 0 : exit_failed;
}

struct GenerateArgs {
    std::string family;
    std::vector<int> params;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::optional<std::string> out;
    std::optional<int> assignment_k;
};

int run_generate(const GenerateArgs & a)
{
    const auto & names = family_names();
    if (std::find(names.begin(), names.end(), a.family) == names.end())
        throw UsageError("unknown family \"" + a.family + "\"");
    Generated g;
    try {
        g = generate(a.family, a.params, a.p, a.seed);
    } catch (const std::invalid_argument & e) {
        throw UsageError(e.what());
    }
    std::optional<KAssignment> labels;
    if (a.assignment_k) {
        require_valid_k(*a.assignment_k);
        Rng rng(a.seed ^ 0x5bd1e995u);
        labels = random_assignment(g.graph.order(), *a.assignment_k, rng);
    }
    if (! a.out) {
        std::cout << terminated(render_graph(g.graph));
        if (! std::holds_alternative<std::monostate>(g.model) || labels)
            std::cerr << "model and assignment are written only with --out\n";
        return 0;
    }
    write_file(*a.out + ".graph", render_graph(g.graph));
    std::cerr << "wrote " << *a.out << ".graph\n";
    if (! std::holds_alternative<std::monostate>(g.model)) {
        const auto path = *a.out + model_suffix(g.model);
        write_file(path, render_model(g.model));
        std::cerr << "wrote " << path << '\n';
    }
    if (labels) {
        write_file(*a.out + ".labels", render_assignment(*labels));
        std::cerr << "wrote " << *a.out << ".labels\n";
    }
    return 0;
}

struct ConvertArgs {
    std::string input;
    std::string from;
    std::string to;
    std::optional<std::string> out;
};

const std::vector<std::string> formats{"graph", "cotree", "p4tree", "tree", "intervals", "perm", "bipartite", "split"};

std::string convert(const ConvertArgs & a)
{
    std::string from = a.from;
    if (from.empty()) {
        const auto dot = a.input.rfind('.');
        from = dot == std::string::npos ? "graph" : a.input.substr(dot + 1);
        if (std::find(formats.begin(), formats.end(), from) == formats.end())
            from = "graph";
    }
    if (std::find(formats.begin(), formats.end(), from) == formats.end())
        throw UsageError("unknown input format \"" + from + "\"");
    if (std::find(formats.begin(), formats.end(), a.to) == formats.end())
        throw UsageError("unknown output format \"" + a.to + "\"");
    if (from == "split")
        throw UsageError("a split partition converts only from its graph");

    StructureModel model;
    Graph g;
    if (from == "graph") {
        g = parse_graph(read_file(a.input));
    } else {
        model = parse_model(from, read_file(a.input), std::nullopt);
        g = *model_graph(model);
    }
    if (a.to == "graph")
        return render_graph(g);
    if (a.to == "cotree")
        return render_cotree(std::holds_alternative<Cotree>(model) ? std::get<Cotree>(model) : require_cotree(g));
    if (a.to == "p4tree")
        return render_p4sparse(
            std::holds_alternative<P4SparseTree>(model) ? std::get<P4SparseTree>(model) : require_p4tree(g));
    if (a.to == "tree")
        return render_tree_model(
            std::holds_alternative<RootedTreeModel>(model) ? std::get<RootedTreeModel>(model) : require_tree_model(g));
    if (a.to == "split") {
        auto part = split_partition(g);
        if (! part)
            throw UsageError("not a split graph");
        return render_split_partition(*part);
    }
    if (a.to == "intervals" && std::holds_alternative<IntervalModel>(model))
        return render_interval_model(compact_model(build_arrangement(std::get<IntervalModel>(model))));
    if (a.to == "perm" && std::holds_alternative<PermutationDiagram>(model))
        return render_permutation(std::get<PermutationDiagram>(model));
    if (a.to == "bipartite" && std::holds_alternative<BipartiteInstance>(model))
        return render_bipartite(std::get<BipartiteInstance>(model));
    throw UsageError("no conversion from " + from + " to " + a.to + " (" + a.to + " models are not recognized from graphs)");
}

int run_convert(const ConvertArgs & a)
{
    const auto text = terminated(convert(a));
    if (a.out)
        write_file(*a.out, text);
    else
        std::cout << text;
    return 0;
}

struct BenchArgs {
    std::string solver;
    std::vector<int> sizes;
    std::optional<int> k;
    std::string problem = "rainbow";
    std::uint64_t seed = 1;
};

int run_bench(const BenchArgs & a)
{
    const auto solver = parse_class(a.solver);
    if (! solver || *solver == SolverClass::automatic || *solver == SolverClass::p4sparse)
        throw UsageError("bench supports cograph, trivially-perfect, interval, permutation, complete-bipartite, oracle");
    const bool weak = a.problem == "weak";
    if (! weak && a.problem != "rainbow")
        throw UsageError("bench runs rainbow or weak");
    const bool two = *solver == SolverClass::interval || *solver == SolverClass::permutation;
    const int k = a.k.value_or(two || *solver == SolverClass::oracle ? 2 : 8);
    require_valid_k(k);
    if (two && k != 2)
        throw UsageError("interval and permutation solvers need k=2");
    auto sizes = a.sizes;
    if (sizes.empty()) {
        switch (*solver) {
        case SolverClass::interval: sizes = {10, 15, 20, 25}; break;
        case SolverClass::permutation: sizes = {10, 20, 30}; break;
        case SolverClass::oracle: sizes = {6, 8, 10}; break;
        default: sizes = {1000, 10000, 100000}; break;
        }
    }
    const auto config = oracle_config_from_env();
    const std::string problem = *solver == SolverClass::complete_bipartite ? "weakL" : a.problem;

    std::cout << "class\tproblem\tn\tk\tvalue\tseconds\n";
    for (int n : sizes) {
        if (n < 1)
            throw UsageError("sizes must be positive");
        Rng rng(a.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(n));
        std::function<int()> job;
        switch (*solver) {
        case SolverClass::cograph: {
            auto t = random_cotree(n, rng);
            job = [t, k, weak] { return weak ? weak_cograph(t, k).value : rainbow_cograph(t, k).value; };
            break;
        }
        case SolverClass::trivially_perfect: {
            auto m = random_tree_model(n, rng);
            job = [m, k, weak] { return weak ? gamma_wk_tp(m, k).value : gamma_rk_tp(m, k); };
            break;
        }
        case SolverClass::interval: {
            auto m = random_interval_model(n, rng);
            job = [m, weak] {
                auto arr = build_arrangement(m);
                return weak ? weak2_interval(arr).value : rainbow2_interval(arr).value;
            };
            break;
        }
        case SolverClass::permutation: {
            auto d = random_permutation(n, rng);
            job = [d, weak] { return weak ? weak2_permutation(d).value : rainbow2_permutation(d).value; };
            break;
        }
        case SolverClass::complete_bipartite: {
            BipartiteInstance inst{n / 2, n - n / 2, k, {}, {}};
            for (auto * side : {&inst.b1, &inst.b2})
                for (int i = 0; i < (side == &inst.b1 ? inst.n1 : inst.n2); ++i)
                    side->push_back(uniform_int(rng, 0, k));
            job = [inst] { return weakL_complete_bipartite(inst).value; };
            break;
        }
        default: {
            auto g = random_graph(n, 0.5, rng);
            job = [g, k, weak, config] {
                return weak ? exact_weight_variant(g, WeightVariant::weak_k(), k, config)->value
                            : exact_rainbow(g, k, config).value;
            };
            break;
        }
        }
        const auto start = std::chrono::steady_clock::now();
        const int value = job();
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::cout << a.solver << '\t' << problem << '\t' << n << '\t' << k << '\t' << value << '\t' << std::fixed
                  << std::setprecision(6) << took.count() << std::defaultfloat << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact rainbow and weak {k}-domination solvers"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto * solve_cmd = app.add_subcommand("solve", "Solve one instance; prints the optimum");
    solve_cmd->add_option("--problem", solve_args.problem, "rainbow, weak, kdom, jkdom or weakL")->required();
    solve_cmd->add_option("--k", solve_args.k, "number of colours / weight bound")->required();
    solve_cmd->add_option("--j", solve_args.j, "weight cap for jkdom");
    solve_cmd->add_option("--class", solve_args.solver,
        "auto, cograph, p4sparse, trivially-perfect, interval, permutation, complete-bipartite or oracle");
    solve_cmd->add_option("--graph", solve_args.graph, "edge-list graph file");
    solve_cmd->add_option("--model", solve_args.model, "structure model, format by suffix");
    solve_cmd->add_option("--assignment", solve_args.assignment, "\"v a b\" labels for weakL");
    solve_cmd->add_option("--witness", solve_args.witness, "write the validated witness as JSON");

    VerifyArgs verify_args;
    auto * verify_cmd = app.add_subcommand("verify", "Run certification checks; prints the JSON report");
    verify_cmd->add_option("--plan", verify_args.plan, "plan JSON file");
    verify_cmd->add_option("--seed", verify_args.seed, "seed (overrides the plan)");
    verify_cmd->add_option("--check", verify_args.checks, "check to run (repeatable)");
    verify_cmd->add_option("--mutation", verify_args.mutation, "deliberate defect to inject");
    verify_cmd->add_option("--params", verify_args.params, "check parameters as a JSON object");
    verify_cmd->add_option("--workers", verify_args.workers, "worker threads");
    verify_cmd->add_flag("--timing", verify_args.timing, "include wall-clock times in the report");
    verify_cmd->add_option("--report", verify_args.report, "write the report here instead of standard output");

    GenerateArgs gen_args;
    auto * gen_cmd = app.add_subcommand("generate", "Write a graph and its structure model");
    gen_cmd->add_option("family", gen_args.family, "graph family")->required();
    gen_cmd->add_option("params", gen_args.params, "integer parameters of the family");
    gen_cmd->add_option("--p", gen_args.p, "edge probability for random families");
    gen_cmd->add_option("--seed", gen_args.seed, "random seed");
    gen_cmd->add_option("--out", gen_args.out, "output prefix; without it the graph goes to standard output");
    gen_cmd->add_option("--assignment", gen_args.assignment_k, "also write random weak {k}-L labels for this k");

    ConvertArgs conv_args;
    auto * conv_cmd = app.add_subcommand("convert", "Convert between graph and model formats");
    conv_cmd->add_option("input", conv_args.input, "input file")->required();
    conv_cmd->add_option("--from", conv_args.from, "input format (default: by suffix, else graph)");
    conv_cmd->add_option("--to", conv_args.to, "graph, cotree, p4tree, tree, intervals, perm, bipartite or split")
        ->required();
    conv_cmd->add_option("--out", conv_args.out, "output file (default: standard output)");

    BenchArgs bench_args;
    auto * bench_cmd = app.add_subcommand("bench", "Time a solver on random instances");
    bench_cmd->add_option("class", bench_args.solver, "solver class")->required();
    bench_cmd->add_option("--sizes", bench_args.sizes, "instance sizes")->delimiter(',');
    bench_cmd->add_option("--k", bench_args.k, "k");
    bench_cmd->add_option("--problem", bench_args.problem, "rainbow or weak");
    bench_cmd->add_option("--seed", bench_args.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*solve_cmd)
            return run_solve(solve_args);
        if (*verify_cmd)
            return run_verify(verify_args);
        if (*gen_cmd)
            return run_generate(gen_args);
        if (*conv_cmd)
            return run_convert(conv_args);
        return run_bench(bench_args);
    } catch (const OracleCapExceeded & e) {
        std::cerr << "error: " << e.what()
                  << "\nno polynomial solver applies; pass a structure model or raise RAINBOWDOM_ORACLE_CAP (at most "
                  << oracle_hard_cap << ")\n";
        return exit_cap;
    } catch (const Infeasible & e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return exit_infeasible;
    } catch (const UsageError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PlanError & e) {
        std::cerr << "plan error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_failed;
    }
}
