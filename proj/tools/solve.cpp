#include "solve.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <type_traits>

namespace rdom::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view problem_names[] = {"rainbow", "weak", "kdom", "jkdom", "weakL"};
constexpr std::string_view class_names[] = {
    "auto", "cograph", "p4sparse", "trivially-perfect", "interval", "permutation", "complete-bipartite", "oracle"};

bool ends_with(std::string_view s, std::string_view suffix)
{
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool same_graph(const Graph & a, const Graph & b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    for (Vertex v = 0; v < a.order(); ++v)
        for (Vertex u : a.neighbors(v))
            if (! b.adjacent(u, v))
                return false;
    return true;
}

std::string vertex_list(std::span<const Vertex> vs)
{
    std::string out;
    for (Vertex v : vs)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

json rainbow_json(const RainbowFunction & f)
{
    json labels = json::object();
    for (std::size_t v = 0; v < f.labels.size(); ++v) {
        std::vector<int> colors;
        for (int c = 0; c < f.k; ++c)
            if (f.labels[v] >> c & 1)
                colors.push_back(c + 1);
        labels[std::to_string(v)] = colors;
    }
    return labels;
}

json weights_json(const WeightFunction & w)
{
    json weights = json::object();
    for (std::size_t v = 0; v < w.weights.size(); ++v)
        weights[std::to_string(v)] = w.weights[v];
    return weights;
}

// A solver's answer before validation: exactly one of the witnesses is set.
struct Answer {
    int value = 0;
    std::optional<RainbowFunction> labels;
    std::optional<WeightFunction> weights;
};

struct Context {
    const SolveRequest & req;
    const Graph & graph;
    const StructureModel & model;
    const std::optional<KAssignment> & labels;
};

KAssignment weak_labels(int k, int n) { return KAssignment(k, n, Label{0, k}); }

Cotree cotree_of(const Context & cx)
{
    if (auto * t = std::get_if<Cotree>(&cx.model))
        return *t;
    return require_cotree(cx.graph);
}

P4SparseTree p4tree_of(const Context & cx)
{
    if (auto * t = std::get_if<P4SparseTree>(&cx.model))
        return *t;
    return require_p4tree(cx.graph);
}

RootedTreeModel tree_of(const Context & cx)
{
    if (auto * t = std::get_if<RootedTreeModel>(&cx.model))
        return *t;
    return require_tree_model(cx.graph);
}

Answer solve_cograph(const Context & cx)
{
    const auto tree = cotree_of(cx);
    const int k = cx.req.k;
    switch (cx.req.problem) {
    case Problem::rainbow: {
        auto r = rainbow_cograph(tree, k);
        return {r.value, r.witness, {}};
    }
    case Problem::weak: {
        auto r = weak_cograph(tree, k);
        return {r.value, {}, r.witness};
    }
    default: {
        auto r = kdom_cograph(tree, k);
        return {r.value, {}, r.witness};
    }
    }
}

Answer solve_p4sparse(const Context & cx)
{
    auto r = rainbow_p4sparse(p4tree_of(cx), cx.req.k);
    return {r.value, r.witness, {}};
}

Answer solve_trivially_perfect(const Context & cx)
{
    const auto tree = tree_of(cx);
    const int k = cx.req.k;
    switch (cx.req.problem) {
    case Problem::rainbow: {
        // Labels come from the cograph sweep; the value from the tree model.
        const int value = gamma_rk_tp(tree, k);
        auto r = rainbow_cograph(cotree_of(cx), k);
        if (r.value != value)
            throw std::logic_error("trivially perfect and cograph rainbow values differ");
        return {value, r.witness, {}};
    }
    case Problem::weak: {
        auto r = gamma_wk_tp(tree, k);
        return {r.value, {}, r.witness};
    }
    case Problem::weakL: {
        auto r = gamma_wkL(tree, *cx.labels);
        return {r.value, {}, r.witness};
    }
    default: {
        const int j = cx.req.problem == Problem::kdom ? k : cx.req.j;
        auto r = jk_domination_tp(tree, j, k);
        if (! r)
            throw Infeasible("no (" + std::to_string(j) + "," + std::to_string(k) + ")-dominating function exists");
        return {r->value, {}, r->witness};
    }
    }
}

Answer solve_interval(const Context & cx)
{
    const auto * model = std::get_if<IntervalModel>(&cx.model);
    if (! model)
        throw UsageError("class interval needs an interval model (--model FILE.intervals)");
    auto arr = build_arrangement(*model);
    if (cx.req.problem == Problem::rainbow) {
        auto r = rainbow2_interval(arr);
        return {r.value, r.witness, {}};
    }
    auto r = weak2_interval(arr);
    return {r.value, {}, r.witness};
}

Answer solve_permutation(const Context & cx)
{
    const auto * diagram = std::get_if<PermutationDiagram>(&cx.model);
    if (! diagram)
        throw UsageError("class permutation needs a permutation diagram (--model FILE.perm)");
    if (cx.req.problem == Problem::rainbow) {
        auto r = rainbow2_permutation(*diagram);
        return {r.value, r.witness, {}};
    }
    auto r = weak2_permutation(*diagram);
    return {r.value, {}, r.witness};
}

// Relabels the graph so that side V comes first, solves, and maps the weights back.
std::optional<Answer> solve_complete_bipartite(const Context & cx, bool strict)
{
    auto fail = [&](const std::string & why) -> std::optional<Answer> {
        if (strict)
            throw UsageError(why);
        return std::nullopt;
    };
    const int n = cx.graph.order();
    const int k = cx.req.k;
    const auto labels = cx.req.problem == Problem::weakL ? *cx.labels : weak_labels(k, n);

    VertexSet order;
    int n1 = 0;
    if (const auto * inst = std::get_if<BipartiteInstance>(&cx.model)) {
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        n1 = inst->n1;
    } else {
        auto sides = complete_bipartite_sides(cx.graph);
        if (! sides)
            return fail("not a complete bipartite graph");
        order = sides->first;
        order.insert(order.end(), sides->second.begin(), sides->second.end());
        n1 = static_cast<int>(sides->first.size());
    }
    KAssignment ordered(k, n);
    for (int i = 0; i < n; ++i) {
        ordered.labels[i] = labels.labels[order[i]];
        if (ordered.labels[i].a != 0)
            return fail("complete-bipartite solver needs every a-label to be zero");
    }
    auto r = weakL_complete_bipartite(bipartite_instance(n1, n - n1, ordered));
    WeightFunction w(k, n);
    for (int i = 0; i < n; ++i)
        w.weights[order[i]] = r.witness.weights[i];
    return Answer{r.value, {}, w};
}

Answer solve_oracle(const Context & cx)
{
    const auto & g = cx.graph;
    const int k = cx.req.k;
    if (cx.req.problem == Problem::rainbow) {
        auto r = exact_rainbow(g, k, cx.req.oracle);
        return {r.value, r.witness, {}};
    }
    WeightVariant variant;
    switch (cx.req.problem) {
    case Problem::weak: variant = WeightVariant::weak_k(); break;
    case Problem::kdom: variant = WeightVariant::k_dom(); break;
    case Problem::jkdom: variant = WeightVariant::jk_dom(cx.req.j); break;
    default: variant = WeightVariant::weak_kL(*cx.labels); break;
    }
    auto r = exact_weight_variant(g, variant, k, cx.req.oracle);
    if (! r)
        throw Infeasible("no (" + std::to_string(cx.req.j) + "," + std::to_string(k) + ")-dominating function exists");
    return {r->value, {}, r->witness};
}

SolverClass model_class(const StructureModel & model)
{
    static constexpr SolverClass by_index[] = {SolverClass::automatic, SolverClass::cograph, SolverClass::p4sparse,
        SolverClass::trivially_perfect, SolverClass::interval, SolverClass::permutation, SolverClass::complete_bipartite,
        SolverClass::oracle};
    return by_index[model.index()];
}

// First recognizer that accepts the graph and supports the problem; oracle otherwise.
SolverClass pick_class(const Context & cx)
{
    const auto problem = cx.req.problem;
    const int k = cx.req.k;
    if (! std::holds_alternative<std::monostate>(cx.model)) {
        const auto c = model_class(cx.model);
        if (c != SolverClass::oracle && supports(c, problem, k))
            return c;
    }
    if (supports(SolverClass::cograph, problem, k) && std::holds_alternative<Cotree>(recognize_cograph(cx.graph)))
        return SolverClass::cograph;
    if (supports(SolverClass::p4sparse, problem, k)
        && std::holds_alternative<P4SparseTree>(recognize_p4sparse(cx.graph)))
        return SolverClass::p4sparse;
    if (supports(SolverClass::trivially_perfect, problem, k)
        && std::holds_alternative<RootedTreeModel>(build_tree_model(cx.graph)))
        return SolverClass::trivially_perfect;
    if (supports(SolverClass::complete_bipartite, problem, k) && complete_bipartite_sides(cx.graph))
        return SolverClass::complete_bipartite;
    return SolverClass::oracle;
}

Verdict validate(const Context & cx, const Answer & a)
{
    const auto & g = cx.graph;
    switch (cx.req.problem) {
    case Problem::rainbow: return is_rainbow(g, *a.labels);
    case Problem::weak: return is_weak_k(g, *a.weights);
    case Problem::kdom: return is_k_dom(g, *a.weights);
    case Problem::jkdom: return is_jk_dom(g, *a.weights, cx.req.j);
    default: return is_weak_kL(g, *a.weights, *cx.labels);
    }
}

void check_request(const SolveRequest & req, const Inputs & in)
{
    require_valid_k(req.k);
    if (req.problem == Problem::jkdom) {
        if (req.j < 1 || req.j > req.k)
            throw UsageError("jkdom needs 1 <= j <= k");
    } else if (req.j != 0) {
        throw UsageError("--j applies only to jkdom");
    }
    if (req.problem == Problem::weakL) {
        if (! in.labels)
            throw UsageError("weakL needs an assignment (--assignment FILE or a .bipartite model)");
        if (in.labels->k != req.k)
            throw UsageError("assignment is for k=" + std::to_string(in.labels->k) + ", not k=" + std::to_string(req.k));
        if (static_cast<int>(in.labels->labels.size()) != in.graph->order())
            throw UsageError("assignment has " + std::to_string(in.labels->labels.size()) + " labels for "
                + std::to_string(in.graph->order()) + " vertices");
    } else if (in.labels) {
        throw UsageError("an assignment applies only to weakL");
    }
    if (req.solver != SolverClass::automatic && ! supports(req.solver, req.problem, req.k)) {
        std::string why = "class " + std::string(class_name(req.solver)) + " does not solve "
            + std::string(problem_names[static_cast<int>(req.problem)]);
        if (req.solver == SolverClass::interval || req.solver == SolverClass::permutation)
            why += " at k=" + std::to_string(req.k) + " (needs rainbow or weak with k=2)";
        throw UsageError(why);
    }
    const auto given = model_class(in.model);
    if (req.solver != SolverClass::automatic && ! std::holds_alternative<std::monostate>(in.model)
        && given != SolverClass::oracle && given != req.solver)
        throw UsageError("model format does not match class " + std::string(class_name(req.solver)));
}

} // namespace

Cotree require_cotree(const Graph & g)
{
    auto got = recognize_cograph(g);
    if (auto * p4 = std::get_if<InducedP4>(&got))
        throw UsageError("not a cograph: induced P4 on vertices " + vertex_list(p4->path));
    return std::get<Cotree>(got);
}

P4SparseTree require_p4tree(const Graph & g)
{
    auto got = recognize_p4sparse(g);
    if (auto * bad = std::get_if<P4SparseRefusal>(&got))
        throw UsageError("not P4-sparse: vertices " + vertex_list(bad->vertices) + " induce two or more P4s");
    return std::get<P4SparseTree>(got);
}

RootedTreeModel require_tree_model(const Graph & g)
{
    auto got = build_tree_model(g);
    if (auto * bad = std::get_if<TreeModelRefusal>(&got))
        throw UsageError(std::string("not trivially perfect: induced ") + (bad->cycle ? "C4" : "P4") + " on vertices "
            + vertex_list(bad->vertices));
    return std::get<RootedTreeModel>(got);
}

std::optional<Problem> parse_problem(std::string_view name)
{
    for (std::size_t i = 0; i < std::size(problem_names); ++i)
        if (problem_names[i] == name)
            return static_cast<Problem>(i);
    return std::nullopt;
}

std::optional<SolverClass> parse_class(std::string_view name)
{
    for (std::size_t i = 0; i < std::size(class_names); ++i)
        if (class_names[i] == name)
            return static_cast<SolverClass>(i);
    return std::nullopt;
}

std::string_view class_name(SolverClass c) { return class_names[static_cast<int>(c)]; }

bool supports(SolverClass c, Problem problem, int k)
{
    switch (c) {
    case SolverClass::automatic:
    case SolverClass::oracle:
    case SolverClass::trivially_perfect: return true;
    case SolverClass::cograph: return problem == Problem::rainbow || problem == Problem::weak || problem == Problem::kdom;
    case SolverClass::p4sparse: return problem == Problem::rainbow;
    case SolverClass::interval:
    case SolverClass::permutation: return k == 2 && (problem == Problem::rainbow || problem == Problem::weak);
    case SolverClass::complete_bipartite: return problem == Problem::weak || problem == Problem::weakL;
    }
    return false;
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw UsageError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

StructureModel parse_model(std::string_view format, const std::string & text, std::optional<int> order)
{
    if (format == "cotree")
        return parse_cotree(text);
    if (format == "p4tree")
        return parse_p4sparse(text);
    if (format == "tree")
        return parse_tree_model(text);
    if (format == "intervals")
        return parse_interval_model(text);
    if (format == "perm")
        return parse_permutation(text);
    if (format == "bipartite")
        return parse_bipartite(text);
    if (format == "split") {
        if (! order)
            throw UsageError("a split partition needs the graph (--graph)");
        return parse_split_partition(text, *order);
    }
    throw UsageError("unknown model format \"" + std::string(format) + "\"");
}

StructureModel load_model(const std::string & path, std::optional<int> order)
{
    for (std::string_view format : {"cotree", "p4tree", "tree", "intervals", "perm", "bipartite", "split"})
        if (ends_with(path, "." + std::string(format)))
            return parse_model(format, read_file(path), order);
    throw UsageError("unknown model suffix on " + path
        + " (expected .cotree, .p4tree, .tree, .intervals, .perm, .bipartite or .split)");
}

std::optional<Graph> model_graph(const StructureModel & model)
{
    return std::visit(
        [](const auto & m) -> std::optional<Graph> {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, Cotree>)
                return cotree_to_graph(m);
            else if constexpr (std::is_same_v<M, P4SparseTree>)
                return p4sparse_to_graph(m);
            else if constexpr (std::is_same_v<M, RootedTreeModel>)
                return tree_model_to_graph(m);
            else if constexpr (std::is_same_v<M, IntervalModel>)
                return interval_model_to_graph(m);
            else if constexpr (std::is_same_v<M, PermutationDiagram>)
                return diagram_to_graph(m);
            else if constexpr (std::is_same_v<M, BipartiteInstance>)
                return bipartite_graph(m);
            else
                return std::nullopt;
        },
        model);
}

Inputs load_inputs(const std::optional<std::string> & graph_path, const std::optional<std::string> & model_path,
    const std::optional<std::string> & assignment_path, int k)
{
    Inputs in;
    if (graph_path)
        in.graph = parse_graph(read_file(*graph_path));
    if (model_path) {
        in.model = load_model(*model_path, in.graph ? std::optional<int>(in.graph->order()) : std::nullopt);
        if (auto g = model_graph(in.model)) {
            if (in.graph && ! same_graph(*in.graph, *g))
                throw UsageError("graph and model describe different graphs");
            in.graph = std::move(g);
        }
        if (const auto * inst = std::get_if<BipartiteInstance>(&in.model)) {
            if (assignment_path)
                throw UsageError("a .bipartite model already carries the assignment");
            in.labels = bipartite_assignment(*inst);
        }
    }
    if (assignment_path)
        in.labels = parse_assignment(read_file(*assignment_path), k);
    return in;
}

SolveOutcome solve(const SolveRequest & req, const Inputs & in)
{
    if (! in.graph)
        throw UsageError("no input graph (--graph or --model)");
    if (const auto * split = std::get_if<SplitPartition>(&in.model); split && ! is_split_partition(*in.graph, *split))
        throw UsageError("split partition does not fit the graph");
    check_request(req, in);

    const Context cx{req, *in.graph, in.model, in.labels};
    SolveOutcome out;
    out.used = req.solver == SolverClass::automatic ? pick_class(cx) : req.solver;
    std::optional<Answer> answer;
    switch (out.used) {
    case SolverClass::cograph: answer = solve_cograph(cx); break;
    case SolverClass::p4sparse: answer = solve_p4sparse(cx); break;
    case SolverClass::trivially_perfect: answer = solve_trivially_perfect(cx); break;
    case SolverClass::interval: answer = solve_interval(cx); break;
    case SolverClass::permutation: answer = solve_permutation(cx); break;
    case SolverClass::complete_bipartite:
        answer = solve_complete_bipartite(cx, req.solver != SolverClass::automatic);
        if (! answer)
            out.used = SolverClass::oracle;
        break;
    default: break;
    }
    if (out.used == SolverClass::oracle)
        answer = solve_oracle(cx);

    const auto verdict = validate(cx, *answer);
    const int cost = answer->labels ? rainbow_cost(*answer->labels) : weight_cost(*answer->weights);
    if (! verdict.ok || cost != answer->value)
        throw std::logic_error("solver " + std::string(class_name(out.used)) + " produced an invalid witness"
            + (verdict.violator ? " at vertex " + std::to_string(*verdict.violator) : std::string()));

    out.value = answer->value;
    out.witness = json{{"problem", problem_names[static_cast<int>(req.problem)]}, {"k", req.k}};
    if (req.problem == Problem::jkdom)
        out.witness["j"] = req.j;
    out.witness["value"] = out.value;
    if (answer->labels)
        out.witness["labels"] = rainbow_json(*answer->labels);
    else
        out.witness["weights"] = weights_json(*answer->weights);
    return out;
}

OracleConfig oracle_config_from_env()
{
    OracleConfig config;
    if (const char * cap = std::getenv("RAINBOWDOM_ORACLE_CAP")) {
        char * end = nullptr;
        const long value = std::strtol(cap, &end, 10);
        if (end == cap || *end != '\0' || value < 1 || value > oracle_hard_cap)
            throw UsageError("RAINBOWDOM_ORACLE_CAP must be an integer in 1.." + std::to_string(oracle_hard_cap));
        config.vertex_cap = static_cast<int>(value);
    }
    return config;
}

} // namespace rdom::cli
