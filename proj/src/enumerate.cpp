#include "rdom/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace rdom {

namespace {

// Copies the subtree of `from` rooted at `node` into `into`, shifting vertices.
template <class Tree>
int graft(Tree & into, const Tree & from, int node, int offset)
{
    const auto & n = from.nodes[node];
    using Kind = typename Tree::Kind;
    if (n.kind == Kind::leaf)
        return into.add_leaf(n.vertex + offset);
    if constexpr (requires { n.feet; }) {
        if (n.kind == Kind::spider) {
            const int head = n.head >= 0 ? graft(into, from, n.head, offset) : -1;
            auto shift = [&](std::vector<Vertex> vs) {
                for (auto & v : vs)
                    v += offset;
                return vs;
            };
            return into.add_spider(n.thick, shift(n.feet), shift(n.body), head);
        }
    }
    const int left = graft(into, from, n.left, offset);
    const int right = graft(into, from, n.right, offset);
    return into.add_internal(n.kind, left, right);
}

template <class Tree>
Tree combine(const Tree & a, const Tree & b, typename Tree::Kind kind)
{
    Tree t;
    const int left = graft(t, a, a.root, 0);
    const int right = graft(t, b, b.root, static_cast<int>(a.nodes[a.root].size));
    t.root = t.add_internal(kind, left, right);
    return t;
}

template <class Tree>
Tree single_leaf()
{
    Tree t;
    t.root = t.add_leaf(0);
    return t;
}

// Builds by_size[1..max] where every size class is closed under union and join
// of smaller classes, plus any extra constructions, deduplicated by graph.
template <class Tree, class ToGraph, class Extra>
std::vector<Tree> build_classes(int max_n, ToGraph to_graph, Extra extra)
{
    std::vector<std::vector<Tree>> by_size(static_cast<std::size_t>(max_n) + 1);
    std::vector<Tree> all;
    for (int n = 1; n <= max_n; ++n) {
        std::unordered_set<std::string> seen;
        auto offer = [&](Tree t) {
            if (seen.insert(canonical_form(to_graph(t))).second)
                by_size[n].push_back(std::move(t));
        };
        if (n == 1)
            offer(single_leaf<Tree>());
        for (int a = 1; a <= n - a; ++a)
            for (std::size_t i = 0; i < by_size[a].size(); ++i)
                for (std::size_t j = a == n - a ? i : 0; j < by_size[n - a].size(); ++j)
                    for (auto kind : {Tree::Kind::union_, Tree::Kind::join})
                        offer(combine(by_size[a][i], by_size[n - a][j], kind));
        extra(n, by_size, offer);
        all.insert(all.end(), by_size[n].begin(), by_size[n].end());
    }
    return all;
}

} // namespace

std::vector<Cotree> enumerate_cographs(int max_leaves)
{
    return build_classes<Cotree>(max_leaves, cotree_to_graph, [](int, auto &, auto &) {});
}

std::vector<P4SparseTree> enumerate_p4sparse(int max_vertices)
{
    return build_classes<P4SparseTree>(max_vertices, p4sparse_to_graph, [](int n, auto & by_size, auto & offer) {
        for (int s = 2; 2 * s <= n; ++s) {
            const int h = n - 2 * s;
            std::vector<Vertex> feet(static_cast<std::size_t>(s)), body(static_cast<std::size_t>(s));
            std::iota(feet.begin(), feet.end(), 0);
            std::iota(body.begin(), body.end(), s);
            for (bool thick : {false, true}) {
                if (h == 0) {
                    P4SparseTree t;
                    t.root = t.add_spider(thick, feet, body, -1);
                    offer(std::move(t));
                    continue;
                }
                for (const auto & head : by_size[h]) {
                    P4SparseTree t;
                    const int r = graft(t, head, head.root, 2 * s);
                    t.root = t.add_spider(thick, feet, body, r);
                    offer(std::move(t));
                }
            }
        }
    });
}

std::vector<RootedTreeModel> enumerate_tree_models(int max_vertices)
{
    std::vector<std::vector<RootedTreeModel>> by_size(static_cast<std::size_t>(max_vertices) + 1);
    std::vector<RootedTreeModel> all;
    for (int n = 1; n <= max_vertices; ++n) {
        std::unordered_set<std::string> seen;
        auto offer = [&](RootedTreeModel m) {
            if (seen.insert(canonical_form(tree_model_to_graph(m))).second)
                by_size[n].push_back(std::move(m));
        };
        // A new root above a smaller forest.
        for (const auto & f : by_size[n - 1]) {
            RootedTreeModel m;
            m.parent.push_back(-1);
            for (Vertex p : f.parent)
                m.parent.push_back(p < 0 ? 0 : p + 1);
            offer(std::move(m));
        }
        if (n == 1)
            offer(RootedTreeModel{{-1}});
        for (int a = 1; a <= n - a; ++a)
            for (const auto & x : by_size[a])
                for (const auto & y : by_size[n - a]) {
                    RootedTreeModel m = x;
                    for (Vertex p : y.parent)
                        m.parent.push_back(p < 0 ? -1 : p + a);
                    offer(std::move(m));
                }
        all.insert(all.end(), by_size[n].begin(), by_size[n].end());
    }
    return all;
}

std::vector<IntervalModel> enumerate_interval_models(int max_vertices)
{
    // Vertices ordered by left endpoint: u meets v > u iff v opens before u
    // closes, i.e. v <= reach[u]. Every vector with u <= reach[u] < n is realised.
    std::vector<IntervalModel> all;
    for (int n = 1; n <= max_vertices; ++n) {
        std::unordered_set<std::string> seen;
        std::vector<int> reach(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u)
            reach[u] = u;
        while (true) {
            IntervalModel m;
            for (int u = 0; u < n; ++u)
                m.intervals.push_back({2 * u, 2 * reach[u] + 1});
            if (seen.insert(canonical_form(interval_model_to_graph(m))).second)
                all.push_back(compact_model(build_arrangement(m)));
            int u = n - 1;
            while (u >= 0 && reach[u] == n - 1) {
                reach[u] = u;
                --u;
            }
            if (u < 0)
                break;
            ++reach[u];
        }
    }
    return all;
}

std::vector<PermutationDiagram> enumerate_permutations(int n)
{
    std::vector<PermutationDiagram> all;
    PermutationDiagram d;
    d.image.resize(static_cast<std::size_t>(n));
    std::iota(d.image.begin(), d.image.end(), 0);
    do
        all.push_back(d);
    while (std::next_permutation(d.image.begin(), d.image.end()));
    return all;
}

} // namespace rdom
