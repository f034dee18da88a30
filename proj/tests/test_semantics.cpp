#include "doctest.h"
#include "rdom/semantics.hpp"

using namespace rdom;

namespace {

Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

} // namespace

TEST_CASE("rainbow cost and validation")
{
    auto c6 = cycle(6);
    RainbowFunction f(2, 6);
    CHECK(rainbow_cost(f) == 0);
    f.labels[0] = f.labels[3] = full_colors(2);
    CHECK(rainbow_cost(f) == 4);
    CHECK(is_rainbow(c6, f).ok);

    RainbowFunction lone(2, 1);
    auto v = is_rainbow(Graph(1), lone);
    CHECK_FALSE(v.ok);
    CHECK(v.violator == 0);

    RainbowFunction ones(3, 6);
    std::fill(ones.labels.begin(), ones.labels.end(), ColorSet{1});
    CHECK(is_rainbow(c6, ones).ok);
    CHECK(rainbow_cost(ones) == 6);
}

TEST_CASE("weak k validation")
{
    auto c6 = cycle(6);
    WeightFunction w(2, 6);
    w.weights = {1, 0, 1, 0, 1, 0};
    CHECK(is_weak_k(c6, w).ok);
    CHECK(weight_cost(w) == 3);

    WeightFunction zero(1, 1);
    CHECK_FALSE(is_weak_k(Graph(1), zero).ok);

    WeightFunction full(3, 6);
    std::fill(full.weights.begin(), full.weights.end(), 3);
    CHECK(is_weak_k(c6, full).ok);
}

TEST_CASE("k and jk domination validation")
{
    std::vector<Edge> e{{0, 1}};
    Graph k2(2, e);
    WeightFunction w(2, 2);
    w.weights = {2, 0};
    CHECK(is_k_dom(k2, w).ok);

    WeightFunction one(2, 1);
    one.weights = {1};
    CHECK_FALSE(is_k_dom(Graph(1), one).ok);

    std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    Graph k14(5, star);
    WeightFunction center(3, 5);
    center.weights[0] = 3;
    CHECK(is_jk_dom(k14, center, 3).ok);
    CHECK_FALSE(is_jk_dom(k14, center, 2).ok);

    WeightFunction lonely(2, 1);
    lonely.weights = {1};
    CHECK_FALSE(is_jk_dom(Graph(1), lonely, 1).ok);
}

TEST_CASE("weak kL validation")
{
    std::vector<Edge> e{{0, 1}};
    Graph k2(2, e);
    KAssignment labels(2, 2);
    labels.labels = {{1, 0}, {0, 2}};
    WeightFunction w(2, 2);
    w.weights = {1, 0};
    auto v = is_weak_kL(k2, w, labels);
    CHECK_FALSE(v.ok);
    CHECK(v.violator == 1);

    w.weights = {2, 0};
    CHECK(is_weak_kL(k2, w, labels).ok);

    KAssignment free(2, 2);
    CHECK(is_weak_kL(k2, WeightFunction(2, 2), free).ok);
}

TEST_CASE("weak kL with (0,k) labels agrees with weak k")
{
    auto c5 = cycle(5);
    const int k = 2;
    KAssignment labels(k, 5, Label{0, k});
    for (int code = 0; code < 243; ++code) {
        WeightFunction w(k, 5);
        int c = code;
        for (int v = 0; v < 5; ++v, c /= 3)
            w.weights[v] = c % 3;
        CHECK(is_weak_kL(c5, w, labels).ok == is_weak_k(c5, w).ok);
    }
}

TEST_CASE("rainbow to weight projection")
{
    auto c6 = cycle(6);
    RainbowFunction f(2, 6);
    f.labels[0] = f.labels[3] = full_colors(2);
    auto w = rainbow_to_weight(f);
    CHECK(w.weights[0] == 2);
    CHECK(w.weights[1] == 0);
    CHECK(weight_cost(w) == rainbow_cost(f));
    CHECK(is_weak_k(c6, w).ok);
}

TEST_CASE("witness text round trips")
{
    RainbowFunction f(3, 3);
    f.labels = {0b101, 0, 0b010};
    CHECK(render_rainbow(f) == "0: {1,3}\n1: {}\n2: {2}\n");
    auto back = parse_rainbow(render_rainbow(f), 3);
    CHECK(back.labels == f.labels);

    WeightFunction w(2, 3);
    w.weights = {2, 0, 1};
    CHECK(parse_weights(render_weights(w), 2).weights == w.weights);

    CHECK_THROWS_AS(parse_rainbow("0: {4}\n", 3), ParseError);
    CHECK_THROWS_AS(parse_weights("0: 1\n0: 1\n", 2), ParseError);

    KAssignment a(2, 2);
    a.labels = {{1, 0}, {0, 2}};
    CHECK(parse_assignment(render_assignment(a), 2).labels == a.labels);
}

TEST_CASE("k outside range is rejected")
{
    CHECK_THROWS_AS(require_valid_k(0), std::invalid_argument);
    CHECK_THROWS_AS(RainbowFunction(parse_rainbow("", 0)), std::invalid_argument);
}
