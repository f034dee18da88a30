#include "doctest.h"
#include "rdom/enumerate.hpp"
#include "rdom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

using namespace rdom;

namespace {

template <class Models, class ToGraph>
std::vector<int> counts_by_order(const Models & models, ToGraph to_graph, int max_n)
{
    std::vector<int> counts(static_cast<std::size_t>(max_n), 0);
    std::unordered_set<std::string> forms;
    for (const auto & m : models) {
        auto g = to_graph(m);
        ++counts[g.order() - 1];
        CHECK(forms.insert(canonical_form(g)).second);
    }
    return counts;
}

// Counts of unlabelled graphs on exactly n vertices passing `keep`, by brute force over labelled graphs.
template <class Keep>
int brute_count(int n, Keep keep)
{
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.emplace_back(u, v);
    std::unordered_set<std::string> forms;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(all[i]);
        Graph g(n, edges);
        if (keep(g))
            forms.insert(canonical_form(g));
    }
    return static_cast<int>(forms.size());
}

bool no_p4_or_c4(const Graph & g)
{
    std::vector<Vertex> vs(4);
    const int n = g.order();
    for (vs[0] = 0; vs[0] < n; ++vs[0])
        for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
            for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
                for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3]) {
                    auto h = induced_subgraph(g, vs);
                    int degs[4];
                    for (int i = 0; i < 4; ++i)
                        degs[i] = h.degree(i);
                    std::sort(degs, degs + 4);
                    const bool p4 = h.size() == 3 && degs[0] == 1 && degs[3] == 2;
                    const bool c4 = h.size() == 4 && degs[0] == 2 && degs[3] == 2;
                    if (p4 || c4)
                        return false;
                }
    return true;
}

} // namespace

TEST_CASE("enumerated classes match brute-force counts")
{
    auto cographs = counts_by_order(enumerate_cographs(6), cotree_to_graph, 6);
    auto p4sparse = counts_by_order(enumerate_p4sparse(6), p4sparse_to_graph, 6);
    auto trees = counts_by_order(enumerate_tree_models(6), tree_model_to_graph, 6);
    for (int n = 1; n <= 6; ++n) {
        CHECK(cographs[n - 1] == brute_count(n, [](const Graph & g) {
            std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
            std::iota(all.begin(), all.end(), 0);
            return ! find_induced_p4(g, all);
        }));
        CHECK(p4sparse[n - 1] == brute_count(n, is_p4sparse_bruteforce));
        CHECK(trees[n - 1] == brute_count(n, no_p4_or_c4));
    }
}

TEST_CASE("enumerated classes have the known sizes")
{
    CHECK(counts_by_order(enumerate_cographs(7), cotree_to_graph, 7) == std::vector<int>{1, 2, 4, 10, 24, 66, 180});
    CHECK(counts_by_order(enumerate_tree_models(7), tree_model_to_graph, 7) == std::vector<int>{1, 2, 4, 9, 20, 48, 115});
    CHECK(counts_by_order(enumerate_interval_models(6), interval_model_to_graph, 6) == std::vector<int>{1, 2, 4, 10, 27, 92});
    // Every random interval graph on six vertices is among the enumerated ones.
    std::unordered_set<std::string> forms;
    for (const auto & m : enumerate_interval_models(6))
        forms.insert(canonical_form(interval_model_to_graph(m)));
    Rng rng(4);
    for (int t = 0; t < 300; ++t)
        CHECK(forms.count(canonical_form(interval_model_to_graph(random_interval_model(6, rng)))) == 1);
    CHECK(enumerate_permutations(4).size() == 24);
    for (const auto & t : enumerate_p4sparse(7))
        CHECK(is_p4sparse_bruteforce(p4sparse_to_graph(t)));
}

TEST_CASE("generator families")
{
    CHECK(generate("cycle", {6}, 0.5, 1).graph.size() == 6);
    auto s = generate("thin_spider", {3, 0}, 0.5, 1);
    CHECK(s.graph.order() == 6);
    CHECK(std::holds_alternative<P4SparseTree>(s.model));
    auto e = generate("gap_cograph", {}, 0.5, 1);
    CHECK(e.graph.order() == 12);
    CHECK(render_model(e.model) == "(J (U (J 0 (U 1 2)) (J 3 (U 4 5))) (U (J 6 (U 7 8)) (J 9 (U 10 11))))\n");
    CHECK(render_graph(generate("random", {8}, 0.5, 7).graph) == render_graph(generate("random", {8}, 0.5, 7).graph));
    auto sp = generate("random_splitgraph", {3, 4}, 0.5, 42);
    REQUIRE(std::holds_alternative<SplitPartition>(sp.model));
    CHECK(is_split_partition(sp.graph, std::get<SplitPartition>(sp.model)));
    CHECK(is_maximal_clique_side(sp.graph, std::get<SplitPartition>(sp.model)));
    CHECK_THROWS_AS(generate("thin_spider", {1}, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate("nonsense", {}, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", {}, 0.5, 1), std::invalid_argument);
    Rng rng(1);
    auto t = random_cotree(1000, rng);
    CHECK(t.leaf_count() == 1000);
}
