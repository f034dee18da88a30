#include "doctest.h"
#include "rdom/interval.hpp"
#include "rdom/oracle.hpp"

#include <random>

using namespace rdom;

namespace {

IntervalModel random_model(std::mt19937_64 & rng, int n)
{
    IntervalModel m;
    for (int v = 0; v < n; ++v) {
        int a = static_cast<int>(rng() % (2 * n)), b = static_cast<int>(rng() % (2 * n));
        if (a > b)
            std::swap(a, b);
        m.intervals.push_back({a, b});
    }
    return m;
}

IntervalModel path_model(int n)
{
    IntervalModel m;
    for (int v = 0; v < n; ++v)
        m.intervals.push_back({v, v + 1});
    return m;
}

} // namespace

TEST_CASE("interval model text")
{
    auto m = parse_interval_model("0 0 2\n1 1 3\n2 4 5\n");
    CHECK(render_interval_model(m) == "0 0 2\n1 1 3\n2 4 5\n");
    auto g = interval_model_to_graph(m);
    CHECK(g.size() == 1);
    CHECK_THROWS_AS(parse_interval_model("0 3 1\n"), ParseError);
    CHECK_THROWS_AS(parse_interval_model("0 1 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_interval_model("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_interval_model("2 1 2\n"), ParseError);
}

TEST_CASE("arrangement preserves the graph")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        auto m = random_model(rng, 1 + static_cast<int>(rng() % 12));
        auto arr = build_arrangement(m);
        CHECK(arrangement_to_graph(arr) == interval_model_to_graph(m));
        for (const auto & c : arr.cliques)
            CHECK(is_clique(interval_model_to_graph(m), c));
    }
}

TEST_CASE("small interval values")
{
    auto p6 = build_arrangement(path_model(6));
    CHECK(weak2_interval(p6).value == 4);
    CHECK(rainbow2_interval(p6).value == 4);
    IntervalModel k5;
    for (int v = 0; v < 5; ++v)
        k5.intervals.push_back({0, 1});
    CHECK(rainbow2_interval(build_arrangement(k5)).value == 2);
    CHECK(weak2_interval(build_arrangement(k5)).value == 2);
    IntervalModel k1{{{0, 0}}};
    CHECK(weak2_interval(build_arrangement(k1)).value == 1);
    CHECK(rainbow2_interval(build_arrangement(k1)).value == 1);
    auto p2 = build_arrangement(path_model(2));
    CHECK(rainbow2_interval(p2).value == 2);
}

TEST_CASE("interval sweeps agree with the oracle")
{
    std::mt19937_64 rng(5);
    int fallbacks = 0;
    for (int t = 0; t < 400; ++t) {
        auto m = random_model(rng, 1 + static_cast<int>(rng() % 11));
        auto arr = build_arrangement(m);
        auto g = arrangement_to_graph(arr);
        auto weak = weak2_interval(arr);
        auto rainbow = rainbow2_interval(arr);
        auto direct = rainbow2_interval_direct(arr);
        auto oracle_weak = exact_weight_variant(g, WeightVariant::weak_k(), 2);
        REQUIRE(oracle_weak);
        auto oracle_rainbow = exact_rainbow(g, 2);
        CHECK(weak.value == oracle_weak->value);
        CHECK(rainbow.value == oracle_rainbow.value);
        CHECK(direct.value == oracle_rainbow.value);
        CHECK(is_weak_k(g, weak.witness).ok);
        CHECK(weight_cost(weak.witness) == weak.value);
        CHECK(is_rainbow(g, rainbow.witness).ok);
        CHECK(rainbow_cost(rainbow.witness) == rainbow.value);
        CHECK(is_rainbow(g, direct.witness).ok);
        fallbacks += rainbow.repaired_by_fallback;
    }
    MESSAGE("greedy colouring fallbacks: " << fallbacks);
}
