#include "rdom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rdom {

namespace {

void require(bool condition, const char * what)
{
    if (! condition)
        throw std::invalid_argument(what);
}

Graph from_edges(int n, const std::vector<Edge> & edges) { return Graph(n, edges); }

Generated spider(int s, int h, bool thick)
{
    require(s >= 2, "spider needs at least two feet");
    require(h >= 0, "spider head size must be non-negative");
    P4SparseTree t;
    std::vector<Vertex> feet, body;
    for (int i = 0; i < s; ++i) {
        feet.push_back(i);
        body.push_back(s + i);
    }
    int head = -1;
    for (int i = 0; i < h; ++i) {
        const int leaf = t.add_leaf(2 * s + i);
        head = head < 0 ? leaf : t.add_internal(P4SparseTree::Kind::join, head, leaf);
    }
    t.root = t.add_spider(thick, feet, body, head);
    Graph g = p4sparse_to_graph(t);
    return {std::move(g), std::move(t)};
}

} // namespace

Graph path_graph(int n)
{
    require(n >= 1, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return from_edges(n, edges);
}

Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return from_edges(n, edges);
}

Graph complete_graph(int n)
{
    require(n >= 1, "complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return from_edges(n, edges);
}

Generated complete_bipartite(int n1, int n2)
{
    require(n1 >= 1 && n2 >= 1, "complete bipartite sides need at least one vertex");
    BipartiteInstance inst{n1, n2, 1, std::vector<int>(n1, 0), std::vector<int>(n2, 0)};
    Graph g = bipartite_graph(inst);
    return {std::move(g), std::move(inst)};
}

Generated thin_spider(int s, int h) { return spider(s, h, false); }
Generated thick_spider(int s, int h) { return spider(s, h, true); }

Graph random_graph(int n, double p, Rng & rng)
{
    require(n >= 0, "vertex count must be non-negative");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (chance(rng, p))
                edges.emplace_back(u, v);
    return from_edges(n, edges);
}

Generated random_splitgraph(int c, int i, double p, Rng & rng)
{
    require(c >= 0 && i >= 0 && c + i >= 1, "splitgraph needs non-negative sides and a vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v)
            edges.emplace_back(u, v);
    for (int u = c; u < c + i; ++u)
        for (int v = 0; v < c; ++v)
            if (chance(rng, p))
                edges.emplace_back(v, u);
    Graph g(c + i, edges);
    SplitPartition part;
    for (int v = 0; v < c; ++v)
        part.clique.push_back(v);
    for (int v = c; v < c + i; ++v)
        part.independent.push_back(v);
    for (std::size_t j = 0; j < part.independent.size(); ++j) {
        const Vertex v = part.independent[j];
        if (std::all_of(part.clique.begin(), part.clique.end(), [&](Vertex x) { return g.adjacent(v, x); })) {
            part.clique.push_back(v);
            part.independent.erase(part.independent.begin() + static_cast<std::ptrdiff_t>(j));
            break;
        }
    }
    return {std::move(g), std::move(part)};
}

Generated gap_cograph()
{
    auto t = parse_cotree("(J (U (J 0 (U 1 2)) (J 3 (U 4 5))) (U (J 6 (U 7 8)) (J 9 (U 10 11))))");
    Graph g = cotree_to_graph(t);
    return {std::move(g), std::move(t)};
}

Cotree random_cotree(int leaves, Rng & rng)
{
    require(leaves >= 1, "cotree needs at least one leaf");
    Cotree t;
    std::vector<int> roots;
    for (int v = 0; v < leaves; ++v)
        roots.push_back(t.add_leaf(v));
    while (roots.size() > 1) {
        const std::size_t a = below(rng, roots.size());
        std::swap(roots[a], roots.back());
        const int left = roots.back();
        roots.pop_back();
        const std::size_t b = below(rng, roots.size());
        const auto kind = chance(rng, 0.5) ? Cotree::Kind::union_ : Cotree::Kind::join;
        roots[b] = t.add_internal(kind, left, roots[b]);
    }
    t.root = roots[0];
    return t;
}

RootedTreeModel random_tree_model(int n, Rng & rng)
{
    require(n >= 0, "vertex count must be non-negative");
    RootedTreeModel m;
    for (int v = 0; v < n; ++v)
        m.parent.push_back(v == 0 || chance(rng, 0.1) ? -1 : static_cast<Vertex>(below(rng, static_cast<std::uint64_t>(v))));
    return m;
}

IntervalModel random_interval_model(int n, Rng & rng)
{
    require(n >= 0, "vertex count must be non-negative");
    IntervalModel m;
    const int span = std::max(1, 2 * n);
    for (int v = 0; v < n; ++v) {
        int a = uniform_int(rng, 0, span - 1), b = uniform_int(rng, 0, span - 1);
        if (a > b)
            std::swap(a, b);
        m.intervals.push_back({a, b});
    }
    return m;
}

PermutationDiagram random_permutation(int n, Rng & rng)
{
    require(n >= 0, "vertex count must be non-negative");
    PermutationDiagram d;
    d.image.resize(static_cast<std::size_t>(n));
    std::iota(d.image.begin(), d.image.end(), 0);
    shuffle(rng, d.image);
    return d;
}

KAssignment random_assignment(int n, int k, Rng & rng)
{
    KAssignment labels(k, n);
    for (auto & l : labels.labels)
        l = {uniform_int(rng, 0, k), uniform_int(rng, 0, k)};
    return labels;
}

const std::vector<std::string> & family_names()
{
    static const std::vector<std::string> names{"path", "cycle", "complete", "complete_bipartite", "thin_spider",
        "thick_spider", "random", "random_splitgraph", "gap_cograph", "random_cotree", "random_tree", "random_interval",
        "random_permutation"};
    return names;
}

Generated generate(std::string_view family, const std::vector<int> & params, double p, std::uint64_t seed)
{
    Rng rng(seed);
    auto arg = [&](std::size_t i, const char * what) {
        if (i >= params.size())
            throw std::invalid_argument(std::string(family) + ": missing parameter " + what);
        return params[i];
    };
    auto arity = [&](std::size_t count) {
        if (params.size() > count)
            throw std::invalid_argument(std::string(family) + ": too many parameters");
    };
    if (family == "path") {
        arity(1);
        return {path_graph(arg(0, "n")), {}};
    }
    if (family == "cycle") {
        arity(1);
        return {cycle_graph(arg(0, "n")), {}};
    }
    if (family == "complete") {
        arity(1);
        return {complete_graph(arg(0, "n")), {}};
    }
    if (family == "complete_bipartite") {
        arity(2);
        return complete_bipartite(arg(0, "n1"), arg(1, "n2"));
    }
    if (family == "thin_spider" || family == "thick_spider") {
        arity(2);
        return spider(arg(0, "feet"), params.size() > 1 ? params[1] : 0, family == "thick_spider");
    }
    if (family == "random") {
        arity(1);
        return {random_graph(arg(0, "n"), p, rng), {}};
    }
    if (family == "random_splitgraph") {
        arity(2);
        return random_splitgraph(arg(0, "c"), arg(1, "i"), p, rng);
    }
    if (family == "gap_cograph") {
        arity(0);
        return gap_cograph();
    }
    if (family == "random_cotree") {
        arity(1);
        auto t = random_cotree(arg(0, "leaves"), rng);
        Graph g = cotree_to_graph(t);
        return {std::move(g), std::move(t)};
    }
    if (family == "random_tree") {
        arity(1);
        auto m = random_tree_model(arg(0, "n"), rng);
        Graph g = tree_model_to_graph(m);
        return {std::move(g), std::move(m)};
    }
    if (family == "random_interval") {
        arity(1);
        auto m = random_interval_model(arg(0, "n"), rng);
        Graph g = interval_model_to_graph(m);
        return {std::move(g), std::move(m)};
    }
    if (family == "random_permutation") {
        arity(1);
        auto d = random_permutation(arg(0, "n"), rng);
        Graph g = diagram_to_graph(d);
        return {std::move(g), std::move(d)};
    }
    throw std::invalid_argument("unknown family \"" + std::string(family) + "\"");
}

std::string render_model(const StructureModel & model)
{
    struct Visitor {
        std::string operator()(const std::monostate &) const { return ""; }
        std::string operator()(const Cotree & t) const { return render_cotree(t) + "\n"; }
        std::string operator()(const P4SparseTree & t) const { return render_p4sparse(t) + "\n"; }
        std::string operator()(const RootedTreeModel & m) const { return render_tree_model(m); }
        std::string operator()(const IntervalModel & m) const { return render_interval_model(m); }
        std::string operator()(const PermutationDiagram & d) const { return render_permutation(d); }
        std::string operator()(const BipartiteInstance & b) const { return render_bipartite(b); }
        std::string operator()(const SplitPartition & s) const { return render_split_partition(s); }
    };
    return std::visit(Visitor{}, model);
}

std::string model_suffix(const StructureModel & model)
{
    static const char * suffixes[] = {"", ".cotree", ".p4tree", ".tree", ".intervals", ".perm", ".bipartite", ".split"};
    return suffixes[model.index()];
}

} // namespace rdom
