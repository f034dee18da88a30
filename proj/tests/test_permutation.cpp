#include "doctest.h"
#include "rdom/oracle.hpp"
#include "rdom/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace rdom;

namespace {

PermutationDiagram identity(int n)
{
    PermutationDiagram d;
    d.image.resize(static_cast<std::size_t>(n));
    std::iota(d.image.begin(), d.image.end(), 0);
    return d;
}

} // namespace

TEST_CASE("permutation text and graph")
{
    auto d = parse_permutation("2 1 4 3\n");
    CHECK(d.image == std::vector<int>{1, 0, 3, 2});
    CHECK(render_permutation(d) == "2 1 4 3\n");
    auto g = diagram_to_graph(d);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 3));
    CHECK(diagram_to_graph(identity(4)).size() == 0);
    auto rev = identity(4);
    std::reverse(rev.image.begin(), rev.image.end());
    CHECK(diagram_to_graph(rev).size() == 6);
    CHECK_THROWS_AS(parse_permutation("1 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 4 2\n"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_permutation("1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(diagram_to_graph(PermutationDiagram{{0, 0}}), std::invalid_argument);
}

TEST_CASE("small permutation values")
{
    auto k4 = identity(4);
    std::reverse(k4.image.begin(), k4.image.end());
    CHECK(rainbow2_permutation(k4).value == 2);
    CHECK(rainbow2_permutation(identity(3)).value == 3);
    CHECK(rainbow2_permutation(PermutationDiagram{{1, 0}}).value == 2);
    CHECK(weak2_permutation(identity(3)).value == 3);
    CHECK(rainbow2_permutation(PermutationDiagram{}).value == 0);
}

TEST_CASE("permutation sweeps agree with the oracle on all diagrams up to 6")
{
    for (int n = 1; n <= 6; ++n) {
        auto d = identity(n);
        do {
            auto g = diagram_to_graph(d);
            auto rainbow = rainbow2_permutation(d);
            auto weak = weak2_permutation(d);
            auto oracle_r = exact_rainbow(g, 2);
            auto oracle_w = exact_weight_variant(g, WeightVariant::weak_k(), 2);
            REQUIRE(oracle_w);
            CHECK(rainbow.value == oracle_r.value);
            CHECK(weak.value == oracle_w->value);
            CHECK(is_rainbow(g, rainbow.witness).ok);
            CHECK(rainbow_cost(rainbow.witness) == rainbow.value);
            CHECK(is_weak_k(g, weak.witness).ok);
            CHECK(weight_cost(weak.witness) == weak.value);
        } while (std::next_permutation(d.image.begin(), d.image.end()));
    }
}

TEST_CASE("permutation value is invariant under diagram symmetries")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto d = identity(12);
        std::shuffle(d.image.begin(), d.image.end(), rng);
        const int v = rainbow2_permutation(d).value;
        CHECK(rainbow2_permutation(reverse_diagram(d)).value == v);
        CHECK(rainbow2_permutation(inverse_diagram(d)).value == v);
        CHECK(weak2_permutation(reverse_diagram(d)).value == weak2_permutation(d).value);
    }
}
