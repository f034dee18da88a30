#include "doctest.h"
#include "rdom/oracle.hpp"
#include "rdom/trivially_perfect.hpp"

#include <random>

using namespace rdom;

namespace {

RootedTreeModel star(int leaves)
{
    RootedTreeModel m;
    m.parent.assign(static_cast<std::size_t>(leaves) + 1, 0);
    m.parent[0] = -1;
    return m;
}

RootedTreeModel chain(int n)
{
    RootedTreeModel m;
    for (int v = 0; v < n; ++v)
        m.parent.push_back(v - 1);
    return m;
}

RootedTreeModel random_forest(std::mt19937_64 & rng, int n)
{
    RootedTreeModel m;
    for (int v = 0; v < n; ++v)
        m.parent.push_back(v == 0 || rng() % 5 == 0 ? -1 : static_cast<Vertex>(rng() % v));
    return m;
}

} // namespace

TEST_CASE("tree model text and graph")
{
    auto m = parse_tree_model("0 -1\n1 0\n2 0\n3 1\n");
    auto g = tree_model_to_graph(m);
    CHECK(g.size() == 4);
    CHECK(g.adjacent(3, 0));
    CHECK_FALSE(g.adjacent(3, 2));
    CHECK(render_tree_model(m) == "0 -1\n1 0\n2 0\n3 1\n");
    CHECK_THROWS_AS(parse_tree_model("0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_tree_model("0 -1\n0 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_tree_model("0 -1\n1 5\n"), ParseError);
}

TEST_CASE("build tree model")
{
    auto k13 = parse_graph("4 3\n0 1\n0 2\n0 3");
    auto r = build_tree_model(k13);
    REQUIRE(std::holds_alternative<RootedTreeModel>(r));
    auto & m = std::get<RootedTreeModel>(r);
    CHECK(m.parent[0] == -1);
    CHECK(tree_model_to_graph(m) == k13);

    auto p4 = build_tree_model(parse_graph("4 3\n0 1\n1 2\n2 3"));
    REQUIRE(std::holds_alternative<TreeModelRefusal>(p4));
    CHECK_FALSE(std::get<TreeModelRefusal>(p4).cycle);
    auto c4 = build_tree_model(parse_graph("4 4\n0 1\n1 2\n2 3\n0 3"));
    REQUIRE(std::holds_alternative<TreeModelRefusal>(c4));
    CHECK(std::get<TreeModelRefusal>(c4).cycle);
}

TEST_CASE("reduction")
{
    auto m = star(3);
    KAssignment same(2, 4, Label{0, 2});
    auto r = reduce_instance(m, same);
    CHECK(r.offset == 0);
    CHECK(r.original.size() == 4);

    KAssignment one(2, 4, Label{0, 2});
    one.labels[1] = {2, 0};
    auto r2 = reduce_instance(m, one);
    CHECK(r2.offset == 2);
    CHECK(r2.fixed_weight[1] == 2);
    CHECK(r2.labels.labels[0].b == 0);
    // Leaves 2 and 3 are not adjacent to leaf 1, so only the root's demand drops.
    CHECK(r2.original.size() == 3);
}

TEST_CASE("descendant order")
{
    auto m = chain(3);
    std::vector<int> b{0, 3, 1};
    auto d = descendant_order(m, b, 0);
    REQUIRE(d.merged.size() == 2);
    CHECK(d.merged[0].d == 3);
    CHECK(d.merged[1].d == 0);

    auto two = star(2);
    std::vector<int> b2{0, 2, 2};
    auto d2 = descendant_order(two, b2, 0);
    CHECK(d2.merged[0].chain == 0);
    CHECK(d2.merged[1].chain == 1);

    CHECK(descendant_order(chain(1), std::vector<int>{0}, 0).merged.empty());
}

TEST_CASE("weak k on stars and cliques")
{
    auto zero = gamma_wkL(star(3), KAssignment(2, 4));
    CHECK(zero.value == 0);
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= 3; ++k)
            CHECK(gamma_wk_tp(star(m), k).value == std::min(k, m + 1));
    for (int c = 1; c <= 5; ++c)
        for (int k = 1; k <= 3; ++k)
            CHECK(gamma_wk_tp(chain(c), k).value == (c == 1 ? 1 : std::min(k, c)));
}

TEST_CASE("gamma_wkL shares ancestor weight across branches")
{
    RootedTreeModel m;
    m.parent = {-1, 0, 0, 1, 1, 2, 2, 2, 2};
    KAssignment labels(3, 9);
    for (Vertex v = 3; v < 9; ++v)
        labels.labels[v] = {0, 3};
    auto got = gamma_wkL(m, labels);
    CHECK(got.value == 3);
    CHECK(is_weak_kL(tree_model_to_graph(m), got.witness, labels).ok);
    CHECK(weight_cost(got.witness) == 3);
}

TEST_CASE("gamma_wkL agrees with the oracle on random forests")
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 1500; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const int k = 1 + static_cast<int>(rng() % 3);
        auto m = random_forest(rng, n);
        auto g = tree_model_to_graph(m);
        KAssignment labels(k, n);
        for (auto & l : labels.labels)
            l = {static_cast<int>(rng() % 3 == 0 ? rng() % (k + 1) : 0), static_cast<int>(rng() % (k + 1))};
        auto got = gamma_wkL(m, labels);
        auto want = exact_weight_variant(g, WeightVariant::weak_kL(labels), k);
        REQUIRE(want);
        CAPTURE(render_tree_model(m));
        CAPTURE(render_assignment(labels));
        CHECK(got.value == want->value);
        CHECK(is_weak_kL(g, got.witness, labels).ok);
        CHECK(weight_cost(got.witness) == got.value);
    }
}

TEST_CASE("jk domination by levels")
{
    auto one = jk_domination_tp(star(4), 3, 3);
    REQUIRE(one);
    CHECK(one->value == 3);
    auto s = jk_domination_tp(star(4), 1, 2);
    REQUIRE(s);
    CHECK(s->value == 5);
    auto p = jk_domination_tp(chain(5), 2, 5);
    REQUIRE(p);
    CHECK(p->value == 5);
    CHECK(is_jk_dom(tree_model_to_graph(chain(5)), p->witness, 2).ok);
    CHECK_FALSE(jk_domination_tp(chain(1), 1, 2).has_value());

    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const int k = 1 + static_cast<int>(rng() % 3);
        const int j = 1 + static_cast<int>(rng() % k);
        auto m = random_forest(rng, n);
        auto g = tree_model_to_graph(m);
        auto got = jk_domination_tp(m, j, k);
        auto want = exact_weight_variant(g, WeightVariant::jk_dom(j), k);
        CHECK(got.has_value() == want.has_value());
        if (got && want)
            CHECK(got->value == want->value);
    }
}
