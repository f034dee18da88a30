#include "doctest.h"
#include "rdom/oracle.hpp"

using namespace rdom;

namespace {

Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph gap_cograph()
{
    auto side = disjoint_union(path(3), path(3));
    return join(side, side);
}

} // namespace

TEST_CASE("exact domination")
{
    CHECK(exact_domination(cycle(6)).value == 2);
    CHECK(exact_domination(Graph(1)).value == 1);
    CHECK(exact_domination(join(Graph(3), Graph(3))).value == 2);
    CHECK(exact_domination(Graph(5)).value == 5);
    CHECK(exact_domination(Graph(0)).value == 0);
}

TEST_CASE("exact rainbow through the product")
{
    auto c6 = exact_rainbow(cycle(6), 2);
    CHECK(c6.value == 4);
    CHECK(is_rainbow(cycle(6), c6.witness).ok);
    CHECK(rainbow_cost(c6.witness) == 4);

    for (int k = 1; k <= 4; ++k)
        CHECK(exact_rainbow(Graph(1), k).value == 1);

    auto g = gap_cograph();
    auto r = exact_rainbow(g, 3, {.vertex_cap = 36});
    CHECK(r.value == 6);
    CHECK(is_rainbow(g, r.witness).ok);
}

TEST_CASE("labeling oracle agrees with the product route")
{
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 2; ++k) {
            CHECK(exact_rainbow_by_labelings(cycle(std::max(n, 3)), k).value
                  == exact_rainbow(cycle(std::max(n, 3)), k).value);
            CHECK(exact_rainbow_by_labelings(path(n), k).value == exact_rainbow(path(n), k).value);
        }
}

TEST_CASE("oracle cap")
{
    CHECK_THROWS_AS(exact_domination(Graph(30)), OracleCapExceeded);
    CHECK_THROWS_AS(exact_rainbow(Graph(13), 2), OracleCapExceeded);
    CHECK_THROWS_AS(exact_domination(Graph(65), {.vertex_cap = 100}), OracleCapExceeded);
    CHECK_THROWS_AS(exact_rainbow(gap_cograph(), 3, {.vertex_cap = 36, .node_budget = 1}), OracleBudgetExceeded);
}

TEST_CASE("weight variants")
{
    auto w = exact_weight_variant(cycle(6), WeightVariant::weak_k(), 2);
    REQUIRE(w);
    CHECK(w->value == 3);
    CHECK(is_weak_k(cycle(6), w->witness).ok);

    auto g = gap_cograph();
    auto w3 = exact_weight_variant(g, WeightVariant::weak_k(), 3);
    REQUIRE(w3);
    CHECK(w3->value == 4);

    std::vector<Edge> e{{0, 1}};
    Graph k2(2, e);
    KAssignment labels(2, 2);
    labels.labels = {{1, 0}, {0, 2}};
    auto wl = exact_weight_variant(k2, WeightVariant::weak_kL(labels), 2);
    REQUIRE(wl);
    CHECK(wl->value == 2);
    CHECK(is_weak_kL(k2, wl->witness, labels).ok);

    CHECK(exact_weight_variant(Graph(1), WeightVariant::weak_k(), 3)->value == 1);
    CHECK(exact_weight_variant(Graph(1), WeightVariant::k_dom(), 3)->value == 3);
    CHECK(exact_weight_variant(k2, WeightVariant::k_dom(), 2)->value == 2);
    CHECK_FALSE(exact_weight_variant(Graph(1), WeightVariant::jk_dom(1), 2).has_value());
    CHECK(exact_weight_variant(path(3), WeightVariant::jk_dom(1), 2)->value == 3);
}

TEST_CASE("oracle invariants on small cycles and paths")
{
    for (int n = 3; n <= 7; ++n) {
        auto g = cycle(n);
        const int gamma = exact_domination(g).value;
        int previous = 0;
        for (int k = 1; k <= 3; ++k) {
            const int r = exact_rainbow(g, k).value;
            const int wk = exact_weight_variant(g, WeightVariant::weak_k(), k)->value;
            CHECK(r >= std::min(k, n));
            CHECK(r <= n);
            CHECK(r <= k * gamma);
            CHECK(wk <= r);
            CHECK(r >= previous);
            previous = r;
        }
        CHECK(exact_rainbow(g, n, {.vertex_cap = 64}).value == n);
    }
}
