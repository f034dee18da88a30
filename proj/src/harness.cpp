#include "rdom/harness.hpp"

#include "rdom/bipartite.hpp"
#include "rdom/cograph.hpp"
#include "rdom/enumerate.hpp"
#include "rdom/gadgets.hpp"
#include "rdom/generators.hpp"
#include "rdom/interval.hpp"
#include "rdom/p4sparse.hpp"
#include "rdom/permutation.hpp"
#include "rdom/random.hpp"
#include "rdom/trivially_perfect.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace rdom {

using nlohmann::json;

bool CertificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult & c) { return c.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// Collects instance outcomes for one check; keeps the first counterexample.
class Recorder {
public:
    explicit Recorder(CheckResult & out) : out_(out) {}

    // Returns ok so callers can skip follow-up work on a failed instance.
    bool expect(bool ok, const std::function<json()> & instance, const std::string & what)
    {
        if (! ok) {
            ++failures_;
            if (! out_.counterexample) {
                json ce = instance();
                ce["failure"] = what;
                out_.counterexample = ce;
            }
        }
        return ok;
    }

    void count(std::uint64_t n = 1) { out_.instances += n; }
    void note(const std::string & line) { notes_.push_back(line); }
    std::uint64_t failures() const { return failures_; }

    void finish()
    {
        out_.passed = failures_ == 0;
        std::ostringstream detail;
        detail << out_.instances << " instances, " << failures_ << " failures";
        for (const auto & n : notes_)
            detail << "; " << n;
        out_.detail = detail.str();
    }

private:
    CheckResult & out_;
    std::uint64_t failures_ = 0;
    std::vector<std::string> notes_;
};

int int_param(const json & params, const char * key, int fallback)
{
    if (! params.contains(key))
        return fallback;
    if (! params[key].is_number_integer())
        throw PlanError(std::string("parameter \"") + key + "\" must be an integer");
    return params[key].get<int>();
}

struct Context {
    const json & params;
    Rng rng;
    const std::string & mutation;
    Recorder & rec;
    CheckResult & out;
};

json graph_instance(const Graph & g, int k)
{
    return json{{"graph", render_graph(g)}, {"k", k}};
}

OracleConfig wide_oracle() { return OracleConfig{oracle_hard_cap, 0}; }

// All graphs on exactly n vertices up to isomorphism (small n only).
std::vector<Graph> all_graphs(int n)
{
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::unordered_set<std::string> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(pairs[i]);
        Graph g(n, edges);
        if (seen.insert(canonical_form(g)).second)
            out.push_back(std::move(g));
    }
    return out;
}

// Smallest dominating set by plain subset enumeration.
int naive_domination(const Graph & g)
{
    const int n = g.order();
    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (Vertex w : g.neighbors(v))
            closed[v] |= 1u << w;
    }
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    int best = n;
    for (std::uint32_t s = 0; s <= all; ++s) {
        const int size = __builtin_popcount(s);
        if (size >= best)
            continue;
        std::uint32_t hit = 0;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1)
                hit |= closed[v];
        if (hit == all)
            best = size;
    }
    return best;
}

CographOptions cograph_options(const std::string & mutation) { return CographOptions{mutation == "drop_join_2k"}; }

void check_known_constants(Context & c)
{
    auto c6 = cycle_graph(6);
    auto gap = gap_cograph();
    const auto & t = std::get<Cotree>(gap.model);
    auto inst_c6 = [&] { return graph_instance(c6, 2); };
    auto inst_gap = [&] { return json{{"graph", render_graph(gap.graph)}, {"cotree", render_cotree(t)}, {"k", 3}}; };
    c.rec.count(2);

    auto w2 = exact_weight_variant(c6, WeightVariant::weak_k(), 2);
    c.rec.expect(w2 && w2->value == 3, inst_c6, "oracle weak 2 on C6 is not 3");
    c.rec.expect(exact_rainbow(c6, 2).value == 4, inst_c6, "product oracle rainbow 2 on C6 is not 4");
    c.rec.expect(exact_rainbow_by_labelings(c6, 2).value == 4, inst_c6, "labeling oracle rainbow 2 on C6 is not 4");

    c.rec.expect(exact_rainbow(gap.graph, 3, OracleConfig{36, 0}).value == 6, inst_gap, "oracle rainbow 3 is not 6");
    auto w3 = exact_weight_variant(gap.graph, WeightVariant::weak_k(), 3);
    c.rec.expect(w3 && w3->value == 4, inst_gap, "oracle weak 3 is not 4");
    auto r = rainbow_cograph(t, 3, cograph_options(c.mutation));
    c.rec.expect(r.value == 6 && is_rainbow(gap.graph, r.witness).ok && rainbow_cost(r.witness) == 6, inst_gap,
        "cograph rainbow 3 is not 6 with a valid witness (got " + std::to_string(r.value) + ")");
    auto w = weak_cograph(t, 3);
    c.rec.expect(w.value == 4 && is_weak_k(gap.graph, w.witness).ok && weight_cost(w.witness) == 4, inst_gap,
        "cograph weak 3 is not 4 with a valid witness");
}

void check_product_identity(Context & c)
{
    const int max_n = int_param(c.params, "max_n", 5), k_max = int_param(c.params, "k_max", 2);
    for (int n = 1; n <= max_n; ++n)
        for (const auto & g : all_graphs(n))
            for (int k = 1; k <= k_max; ++k) {
                c.rec.count();
                auto inst = [&] { return graph_instance(g, k); };
                auto product = cartesian_product_complete(g, k);
                const int via_product = exact_rainbow(g, k, wide_oracle()).value;
                c.rec.expect(via_product == exact_domination(product, wide_oracle()).value, inst,
                    "rainbow oracle differs from domination of the product");
                if (product.order() <= 20)
                    c.rec.expect(via_product == naive_domination(product), inst,
                        "rainbow oracle differs from subset enumeration on the product");
                auto direct = exact_rainbow_by_labelings(g, k, wide_oracle());
                c.rec.expect(via_product == direct.value && is_rainbow(g, direct.witness).ok, inst,
                    "product and labeling oracles disagree");
            }
}

void check_global_invariants(Context & c)
{
    const int count = int_param(c.params, "count", 500), max_n = int_param(c.params, "max_n", 8);
    const int k_max = int_param(c.params, "k_max", 3);
    std::vector<Graph> corpus;
    for (int i = 0; i < count; ++i) {
        const int n = uniform_int(c.rng, 1, max_n);
        const double p = 0.1 + 0.8 * unit_real(c.rng);
        corpus.push_back(random_graph(n, p, c.rng));
    }
    c.rec.count(corpus.size());
    for (const auto & f : sweep_global_invariants(corpus, k_max, wide_oracle()))
        c.rec.expect(false, [&] { return graph_instance(f.graph, f.k); }, f.relation);
}

void check_cograph(Context & c)
{
    const int max_leaves = int_param(c.params, "max_leaves", 8), k_max = int_param(c.params, "k_max", 3);
    const auto options = cograph_options(c.mutation);
    for (const auto & t : enumerate_cographs(max_leaves)) {
        auto g = cotree_to_graph(t);
        auto recognised = recognize_cograph(g);
        auto inst_k = [&](int k) { return [&, k] { return json{{"graph", render_graph(g)}, {"cotree", render_cotree(t)}, {"k", k}}; }; };
        if (! c.rec.expect(std::holds_alternative<Cotree>(recognised), inst_k(1), "cograph not recognised"))
            continue;
        const auto & back = std::get<Cotree>(recognised);
        for (int k = 1; k <= k_max; ++k) {
            c.rec.count();
            auto inst = inst_k(k);
            const int rainbow = exact_rainbow(g, k, wide_oracle()).value;
            auto r = rainbow_cograph(t, k, options);
            c.rec.expect(r.value == rainbow, inst,
                "rainbow " + std::to_string(r.value) + " but oracle " + std::to_string(rainbow));
            c.rec.expect(is_rainbow(g, r.witness).ok && rainbow_cost(r.witness) == r.value, inst, "rainbow witness invalid");
            c.rec.expect(rainbow_cograph(back, k, options).value == r.value, inst, "recognised cotree gives another value");
            auto weak = exact_weight_variant(g, WeightVariant::weak_k(), k, wide_oracle());
            auto w = weak_cograph(t, k);
            c.rec.expect(weak && w.value == weak->value, inst, "weak value differs from oracle");
            c.rec.expect(is_weak_k(g, w.witness).ok && weight_cost(w.witness) == w.value, inst, "weak witness invalid");
            auto kdom = exact_weight_variant(g, WeightVariant::k_dom(), k, wide_oracle());
            auto kd = kdom_cograph(t, k);
            c.rec.expect(kdom && kd.value == kdom->value, inst, "{k}-domination value differs from oracle");
            c.rec.expect(is_k_dom(g, kd.witness).ok && weight_cost(kd.witness) == kd.value, inst, "{k}-domination witness invalid");
        }
    }
}

void check_p4sparse(Context & c)
{
    const int max_vertices = int_param(c.params, "max_vertices", 8), k_max = int_param(c.params, "k_max", 3);
    const int max_feet = int_param(c.params, "max_feet", 5), max_head = int_param(c.params, "max_head", 3);
    // Heads: every P4-sparse graph on up to max_head vertices.
    std::vector<P4SparseTree> heads = enumerate_p4sparse(max_head);
    heads.insert(heads.begin(), P4SparseTree{});
    int thick_mismatches = 0;
    for (int s = 2; s <= max_feet; ++s)
        for (const auto & head : heads)
            for (bool thick : {false, true})
                for (int k = 1; k <= k_max; ++k) {
                    P4SparseTree t;
                    std::vector<Vertex> feet(static_cast<std::size_t>(s)), body(static_cast<std::size_t>(s));
                    std::iota(feet.begin(), feet.end(), 0);
                    std::iota(body.begin(), body.end(), s);
                    int h = -1;
                    if (head.root >= 0) {
                        // Shift the head's vertices past feet and body.
                        auto text = render_p4sparse(head);
                        auto shifted = parse_p4sparse(text);
                        for (auto & node : shifted.nodes)
                            if (node.kind == P4SparseTree::Kind::leaf)
                                node.vertex += 2 * s;
                        t = shifted;
                        h = t.root;
                    }
                    t.root = t.add_spider(thick, feet, body, h);
                    auto g = p4sparse_to_graph(t);
                    c.rec.count();
                    const int oracle = exact_rainbow(g, k, wide_oracle()).value;
                    const int formula = thick ? rainbow_thick_spider(s, g.order(), k) : rainbow_thin_spider(s, g.order(), k);
                    auto inst = [&] { return json{{"graph", render_graph(g)}, {"p4tree", render_p4sparse(t)}, {"k", k}}; };
                    thick_mismatches += thick && oracle != formula;
                    c.rec.expect(oracle == formula, inst,
                        std::string(thick ? "thick" : "thin") + " spider formula " + std::to_string(formula) + " but oracle "
                            + std::to_string(oracle));
                }
    c.rec.note(thick_mismatches == 0 ? "thick spider formula held on the whole grid" : "thick spider formula refuted");
    for (const auto & t : enumerate_p4sparse(max_vertices)) {
        auto g = p4sparse_to_graph(t);
        for (int k = 1; k <= k_max; ++k) {
            c.rec.count();
            auto inst = [&] { return json{{"graph", render_graph(g)}, {"p4tree", render_p4sparse(t)}, {"k", k}}; };
            const int oracle = exact_rainbow(g, k, wide_oracle()).value;
            auto r = rainbow_p4sparse(t, k);
            c.rec.expect(r.value == oracle, inst, "rainbow " + std::to_string(r.value) + " but oracle " + std::to_string(oracle));
            c.rec.expect(is_rainbow(g, r.witness).ok && rainbow_cost(r.witness) == r.value, inst, "witness invalid");
            auto recognised = recognize_p4sparse(g);
            c.rec.expect(std::holds_alternative<P4SparseTree>(recognised)
                    && rainbow_p4sparse(std::get<P4SparseTree>(recognised), k).value == oracle,
                inst, "recognised tree gives another value");
        }
    }
}

void check_trivially_perfect(Context & c)
{
    const int max_vertices = int_param(c.params, "max_vertices", 8), k_max = int_param(c.params, "k_max", 3);
    const int assignments = int_param(c.params, "assignments", 100);
    for (const auto & m : enumerate_tree_models(max_vertices)) {
        auto g = tree_model_to_graph(m);
        for (int k = 1; k <= k_max; ++k) {
            for (int a = 0; a < assignments; ++a) {
                c.rec.count();
                auto labels = random_assignment(m.order(), k, c.rng);
                auto inst = [&] {
                    return json{{"graph", render_graph(g)}, {"tree", render_tree_model(m)}, {"assignment", render_assignment(labels)}, {"k", k}};
                };
                auto oracle = exact_weight_variant(g, WeightVariant::weak_kL(labels), k, wide_oracle());
                auto r = gamma_wkL(m, labels);
                c.rec.expect(oracle && r.value == oracle->value, inst,
                    "weak kL " + std::to_string(r.value) + " but oracle " + std::to_string(oracle ? oracle->value : -1));
                c.rec.expect(is_weak_kL(g, r.witness, labels).ok && weight_cost(r.witness) == r.value, inst, "witness invalid");
                auto reduced = reduce_instance(m, labels);
                auto inner = exact_weight_variant(
                    tree_model_to_graph(reduced.model), WeightVariant::weak_kL(reduced.labels), k, wide_oracle());
                c.rec.expect(oracle && inner && oracle->value == inner->value + reduced.offset, inst,
                    "reduced instance plus offset differs from the original");
            }
            c.rec.count();
            auto inst = [&] { return json{{"graph", render_graph(g)}, {"tree", render_tree_model(m)}, {"k", k}}; };
            auto weak = exact_weight_variant(g, WeightVariant::weak_k(), k, wide_oracle());
            auto wk = gamma_wk_tp(m, k);
            c.rec.expect(weak && wk.value == weak->value && is_weak_k(g, wk.witness).ok, inst, "weak k differs from oracle");
            c.rec.expect(gamma_rk_tp(m, k) == exact_rainbow(g, k, wide_oracle()).value, inst, "rainbow k differs from oracle");
            for (int j = 1; j <= k; ++j) {
                auto oracle = exact_weight_variant(g, WeightVariant::jk_dom(j), k, wide_oracle());
                auto r = jk_domination_tp(m, j, k);
                auto inst_j = [&] {
                    return json{{"graph", render_graph(g)}, {"tree", render_tree_model(m)}, {"j", j}, {"k", k}};
                };
                c.rec.expect(oracle.has_value() == r.has_value() && (! r || r->value == oracle->value), inst_j,
                    "(j,k)-domination differs from oracle");
                if (r)
                    c.rec.expect(is_jk_dom(g, r->witness, j).ok && weight_cost(r->witness) == r->value, inst_j,
                        "(j,k) witness invalid");
            }
        }
    }
}

void check_interval(Context & c)
{
    const int max_vertices = int_param(c.params, "max_vertices", 8);
    int fallbacks = 0;
    for (const auto & m : enumerate_interval_models(max_vertices)) {
        c.rec.count();
        auto arr = build_arrangement(m);
        auto g = arrangement_to_graph(arr);
        auto inst = [&] { return json{{"graph", render_graph(g)}, {"intervals", render_interval_model(m)}, {"k", 2}}; };
        auto weak_oracle = exact_weight_variant(g, WeightVariant::weak_k(), 2, wide_oracle());
        const int rainbow_oracle = exact_rainbow(g, 2, wide_oracle()).value;
        auto w = weak2_interval(arr);
        auto r = rainbow2_interval(arr);
        fallbacks += r.repaired_by_fallback;
        c.rec.expect(weak_oracle && w.value == weak_oracle->value, inst, "weak 2 differs from oracle");
        c.rec.expect(r.value == rainbow_oracle, inst, "rainbow 2 differs from oracle");
        c.rec.expect(weak_oracle && weak_oracle->value == rainbow_oracle, inst, "weak 2 and rainbow 2 differ");
        c.rec.expect(is_weak_k(g, w.witness).ok && weight_cost(w.witness) == w.value, inst, "weak witness invalid");
        c.rec.expect(is_rainbow(g, r.witness).ok && rainbow_cost(r.witness) == r.value, inst, "rainbow witness invalid");
    }
    c.rec.note(std::to_string(fallbacks) + " rainbow witnesses needed the direct sweep");
}

void check_permutation(Context & c)
{
    const int max_n = int_param(c.params, "max_n", 8);
    int weak_below = 0;
    for (int n = 1; n <= max_n; ++n)
        for (const auto & d : enumerate_permutations(n)) {
            c.rec.count();
            auto g = diagram_to_graph(d);
            auto inst = [&] { return json{{"graph", render_graph(g)}, {"permutation", render_permutation(d)}, {"k", 2}}; };
            const int rainbow_oracle = exact_rainbow(g, 2, wide_oracle()).value;
            auto r = rainbow2_permutation(d);
            c.rec.expect(r.value == rainbow_oracle, inst,
                "rainbow 2 " + std::to_string(r.value) + " but oracle " + std::to_string(rainbow_oracle));
            c.rec.expect(is_rainbow(g, r.witness).ok && rainbow_cost(r.witness) == r.value, inst, "rainbow witness invalid");
            auto weak_oracle = exact_weight_variant(g, WeightVariant::weak_k(), 2, wide_oracle());
            auto w = weak2_permutation(d);
            c.rec.expect(weak_oracle && w.value == weak_oracle->value, inst, "weak 2 differs from oracle");
            c.rec.expect(is_weak_k(g, w.witness).ok && weight_cost(w.witness) == w.value, inst, "weak witness invalid");
            weak_below += weak_oracle && weak_oracle->value < rainbow_oracle;
        }
    c.rec.note(std::to_string(weak_below) + " diagrams with weak 2 below rainbow 2");
}

void check_complete_bipartite(Context & c)
{
    const int max_side = int_param(c.params, "max_side", 4), k_exhaustive = int_param(c.params, "k_exhaustive", 2);
    const int random_count = int_param(c.params, "random", 1000), k_random = int_param(c.params, "k_random", 3);
    auto run = [&](const BipartiteInstance & inst) {
        c.rec.count();
        auto g = bipartite_graph(inst);
        auto labels = bipartite_assignment(inst);
        auto describe = [&] { return json{{"bipartite", render_bipartite(inst)}}; };
        auto oracle = exact_weight_variant(g, WeightVariant::weak_kL(labels), inst.k, wide_oracle());
        auto r = weakL_complete_bipartite(inst);
        c.rec.expect(oracle && r.value == oracle->value, describe,
            "weak kL " + std::to_string(r.value) + " but oracle " + std::to_string(oracle ? oracle->value : -1));
        c.rec.expect(is_weak_kL(g, r.witness, labels).ok && weight_cost(r.witness) == r.value, describe, "witness invalid");
        BipartiteInstance swapped{inst.n2, inst.n1, inst.k, inst.b2, inst.b1};
        c.rec.expect(weakL_complete_bipartite(swapped).value == r.value, describe, "value changes when sides swap");
    };
    for (int k = 1; k <= k_exhaustive; ++k)
        for (int n1 = 1; n1 <= max_side; ++n1)
            for (int n2 = 1; n2 <= max_side; ++n2) {
                std::uint64_t combos = 1;
                for (int i = 0; i < n1 + n2; ++i)
                    combos *= static_cast<std::uint64_t>(k + 1);
                for (std::uint64_t code = 0; code < combos; ++code) {
                    BipartiteInstance inst{n1, n2, k, {}, {}};
                    std::uint64_t rest = code;
                    for (int i = 0; i < n1 + n2; ++i, rest /= static_cast<std::uint64_t>(k + 1))
                        (i < n1 ? inst.b1 : inst.b2).push_back(static_cast<int>(rest % static_cast<std::uint64_t>(k + 1)));
                    run(inst);
                }
            }
    for (int t = 0; t < random_count; ++t) {
        BipartiteInstance inst{uniform_int(c.rng, 1, max_side), uniform_int(c.rng, 1, max_side), k_random, {}, {}};
        for (int i = 0; i < inst.n1; ++i)
            inst.b1.push_back(uniform_int(c.rng, 0, k_random));
        for (int i = 0; i < inst.n2; ++i)
            inst.b2.push_back(uniform_int(c.rng, 0, k_random));
        run(inst);
    }
}

void check_gadgets(Context & c)
{
    const int count = int_param(c.params, "count", 200), max_total = int_param(c.params, "max_vertices", 7);
    const int k_max = int_param(c.params, "k_max", 3);
    for (int t = 0; t < count; ++t) {
        const int total = uniform_int(c.rng, 1, max_total);
        const int cs = uniform_int(c.rng, 1, total);
        auto gen = random_splitgraph(cs, total - cs, 0.5, c.rng);
        const auto & part = std::get<SplitPartition>(gen.model);
        for (int k = 1; k <= k_max; ++k) {
            c.rec.count();
            auto inst = [&] {
                return json{{"graph", render_graph(gen.graph)}, {"split", render_split_partition(part)}, {"k", k}};
            };
            auto gadget = pendant_gadget(gen.graph, part, k);
            c.rec.expect(split_partition(gadget.graph).has_value() && is_split_partition(gadget.graph, gadget.partition),
                inst, "gadget graph is not split");
            auto r = verify_gadget_identities(gen.graph, part, k, wide_oracle());
            c.rec.expect(r.rainbow == r.expected, inst,
                "rainbow " + std::to_string(r.rainbow) + " but identity gives " + std::to_string(r.expected));
            c.rec.expect(r.weak == r.expected, inst,
                "weak " + std::to_string(r.weak) + " but identity gives " + std::to_string(r.expected));
            c.rec.expect(r.rainbow_decodes && r.weak_decodes, inst, "decoded set is not a small enough dominating set");
        }
    }
}

void check_scalability(Context & c)
{
    struct Gate {
        const char * name;
        double limit;
        std::function<int()> run;
    };
    const int leaves = int_param(c.params, "cograph_leaves", 100000), tree_n = int_param(c.params, "tree_vertices", 100000);
    const int interval_n = int_param(c.params, "interval_vertices", 25);
    const int permutation_n = int_param(c.params, "permutation_vertices", 30);
    const int k = int_param(c.params, "k", 8);
    auto cotree = random_cotree(leaves, c.rng);
    auto model = random_tree_model(tree_n, c.rng);
    auto intervals = build_arrangement(random_interval_model(interval_n, c.rng));
    auto diagram = random_permutation(permutation_n, c.rng);
    std::vector<Gate> gates{
        {"cograph_rainbow", 1.0, [&] { return rainbow_cograph(cotree, k).value; }},
        {"trivially_perfect_weak", 2.0, [&] { return gamma_wk_tp(model, k).value; }},
        {"interval_rainbow", 60.0, [&] { return rainbow2_interval(intervals).value; }},
        {"permutation_rainbow", 120.0, [&] { return rainbow2_permutation(diagram).value; }},
    };
    json measured = json::object();
    for (const auto & gate : gates) {
        c.rec.count();
        const auto start = Clock::now();
        const int value = gate.run();
        const double seconds = since(start);
        measured[gate.name] = seconds;
        c.rec.expect(seconds < gate.limit, [&] { return json{{"gate", gate.name}, {"value", value}}; },
            std::string(gate.name) + " exceeded its time limit");
    }
    c.rec.note("gates: cograph 1 s, trivially perfect 2 s, interval 60 s, permutation 120 s");
    c.out.measurements = measured;
}

} // namespace

namespace {

struct CheckEntry {
    const char * name;
    void (*run)(Context &);
    std::vector<std::string> mutations;
};

const std::vector<CheckEntry> & check_table()
{
    static const std::vector<CheckEntry> table{
        {"known_constants", check_known_constants, {"drop_join_2k"}},
        {"product_identity", check_product_identity, {}},
        {"global_invariants", check_global_invariants, {}},
        {"cograph", check_cograph, {"drop_join_2k"}},
        {"p4sparse", check_p4sparse, {}},
        {"trivially_perfect", check_trivially_perfect, {}},
        {"interval", check_interval, {}},
        {"permutation", check_permutation, {}},
        {"complete_bipartite", check_complete_bipartite, {}},
        {"gadgets", check_gadgets, {}},
        {"scalability", check_scalability, {}},
    };
    return table;
}

const CheckEntry & find_check(const std::string & name)
{
    for (const auto & e : check_table())
        if (name == e.name)
            return e;
    throw PlanError("unknown check \"" + name + "\"");
}

std::string replay_command(const CertificationPlan & plan, const CheckSpec & spec)
{
    std::string cmd = "rdom verify --check " + spec.name + " --seed " + std::to_string(plan.seed);
    if (! spec.mutation.empty())
        cmd += " --mutation " + spec.mutation;
    if (! spec.params.empty())
        cmd += " --params '" + spec.params.dump() + "'";
    return cmd;
}

CheckResult run_check(const CertificationPlan & plan, const CheckSpec & spec)
{
    CheckResult out;
    out.name = spec.name;
    out.replay = replay_command(plan, spec);
    const auto & entry = find_check(spec.name);
    const auto salt = static_cast<std::uint64_t>(&entry - check_table().data()) + 1;
    Recorder rec(out);
    Context ctx{spec.params, Rng(plan.seed * 0x9E3779B97F4A7C15ull + salt), spec.mutation, rec, out};
    const auto start = Clock::now();
    try {
        entry.run(ctx);
        rec.finish();
    } catch (const OracleBudgetExceeded & e) {
        rec.finish();
        out.passed = false;
        out.budget_exhausted = true;
        out.detail += "; oracle budget exhausted: " + std::string(e.what());
    } catch (const PlanError &) {
        throw;
    } catch (const std::exception & e) {
        rec.finish();
        out.passed = false;
        out.detail += "; error: " + std::string(e.what());
    }
    out.seconds = since(start);
    return out;
}

} // namespace

const std::vector<std::string> & check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto & e : check_table())
            out.push_back(e.name);
        return out;
    }();
    return names;
}

std::vector<std::string> check_mutations(const std::string & check) { return find_check(check).mutations; }

CertificationPlan default_plan(std::uint64_t seed)
{
    CertificationPlan plan;
    plan.seed = seed;
    for (const auto & name : check_names())
        plan.checks.push_back({name, json::object(), ""});
    return plan;
}

CertificationPlan parse_plan(const json & doc)
{
    if (! doc.is_object())
        throw PlanError("plan must be a JSON object");
    CertificationPlan plan;
    try {
        plan.seed = doc.value("seed", std::uint64_t{1});
        plan.workers = doc.value("workers", 1);
        plan.timing = doc.value("timing", false);
        if (plan.workers < 1)
            throw PlanError("workers must be positive");
        for (const auto & c : doc.value("checks", json::array())) {
            CheckSpec spec;
            if (c.is_string())
                spec.name = c.get<std::string>();
            else {
                spec.name = c.at("name").get<std::string>();
                spec.params = c.value("params", json::object());
                spec.mutation = c.value("mutation", std::string());
            }
            const auto & entry = find_check(spec.name);
            if (! spec.params.is_object())
                throw PlanError("params of \"" + spec.name + "\" must be an object");
            if (! spec.mutation.empty()
                && std::find(entry.mutations.begin(), entry.mutations.end(), spec.mutation) == entry.mutations.end())
                throw PlanError("check \"" + spec.name + "\" has no mutation \"" + spec.mutation + "\"");
            plan.checks.push_back(std::move(spec));
        }
    } catch (const json::exception & e) {
        throw PlanError(std::string("malformed plan: ") + e.what());
    }
    return plan;
}

json plan_to_json(const CertificationPlan & plan)
{
    json checks = json::array();
    for (const auto & c : plan.checks) {
        json entry{{"name", c.name}, {"params", c.params}};
        if (! c.mutation.empty())
            entry["mutation"] = c.mutation;
        checks.push_back(entry);
    }
    return json{{"seed", plan.seed}, {"workers", plan.workers}, {"timing", plan.timing}, {"checks", checks}};
}

CertificationReport run_plan(const CertificationPlan & plan)
{
    for (const auto & c : plan.checks)
        find_check(c.name);
    CertificationReport report;
    report.seed = plan.seed;
    report.checks.resize(plan.checks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < plan.checks.size(); i = next++) {
            try {
                report.checks[i] = run_check(plan, plan.checks[i]);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(plan.workers, 1)), plan.checks.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return report;
}

json report_to_json(const CertificationReport & report, bool timing)
{
    json checks = json::array();
    for (const auto & c : report.checks) {
        json entry{{"name", c.name}, {"passed", c.passed}, {"instances", c.instances}, {"detail", c.detail}};
        if (c.budget_exhausted)
            entry["budget_exhausted"] = true;
        if (! c.passed) {
            entry["replay"] = c.replay;
            if (c.counterexample)
                entry["counterexample"] = *c.counterexample;
        }
        if (timing) {
            entry["seconds"] = c.seconds;
            if (! c.measurements.empty())
                entry["measurements"] = c.measurements;
        }
        checks.push_back(entry);
    }
    return json{{"seed", report.seed}, {"passed", report.passed()}, {"checks", checks}};
}

std::vector<InvariantFailure> sweep_global_invariants(const std::vector<Graph> & corpus, int k_max, const OracleConfig & config)
{
    std::vector<InvariantFailure> failures;
    for (const auto & g : corpus) {
        const int n = g.order();
        const int gamma = exact_domination(g, config).value;
        int previous = -1;
        for (int k = 1; k <= k_max; ++k) {
            auto fail = [&](const std::string & what) { failures.push_back({g, k, what}); };
            auto r = exact_rainbow(g, k, config);
            const int rk = r.value;
            if (rk != exact_domination(cartesian_product_complete(g, k), config).value)
                fail("rainbow differs from domination of the product");
            if (! is_rainbow(g, r.witness).ok || rainbow_cost(r.witness) != rk)
                fail("oracle rainbow witness invalid");
            if (rk < std::min(k, n) || rk > n)
                fail("rainbow outside [min(k,n), n]");
            if (rk > k * gamma)
                fail("rainbow above k times domination");
            auto wk = exact_weight_variant(g, WeightVariant::weak_k(), k, config);
            if (! wk || wk->value > rk)
                fail("weak above rainbow");
            if (previous > rk)
                fail("rainbow decreased as k grew");
            previous = rk;
        }
    }
    return failures;
}

} // namespace rdom
