#include "doctest.h"
#include "rdom/bipartite.hpp"
#include "rdom/oracle.hpp"

#include <random>

using namespace rdom;

namespace {

int oracle_value(const BipartiteInstance & inst)
{
    auto r = exact_weight_variant(bipartite_graph(inst), WeightVariant::weak_kL(bipartite_assignment(inst)), inst.k);
    REQUIRE(r);
    return r->value;
}

void check_against_oracle(const BipartiteInstance & inst)
{
    auto r = weakL_complete_bipartite(inst);
    CHECK(r.value == oracle_value(inst));
    CHECK(weight_cost(r.witness) == r.value);
    CHECK(is_weak_kL(bipartite_graph(inst), r.witness, bipartite_assignment(inst)).ok);
    BipartiteInstance swapped{inst.n2, inst.n1, inst.k, inst.b2, inst.b1};
    CHECK(weakL_complete_bipartite(swapped).value == r.value);
}

} // namespace

TEST_CASE("bipartite instance text")
{
    auto inst = parse_bipartite("2 2 2\n2 1\n1 1\n");
    CHECK(inst.b1 == std::vector<int>{2, 1});
    CHECK(render_bipartite(inst) == "2 2 2\n2 1\n1 1\n");
    CHECK(bipartite_graph(inst).size() == 4);
    CHECK_THROWS_AS(parse_bipartite("2 2 2\n2 3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_bipartite("2 2 2\n2 1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_bipartite("2 2 2\n2 1\n1 1 1\n"), ParseError);
    KAssignment bad(2, 2);
    bad.labels[0] = {1, 0};
    CHECK_THROWS_AS(bipartite_instance(1, 1, bad), std::invalid_argument);
}

TEST_CASE("small bipartite values")
{
    CHECK(weakL_complete_bipartite({2, 3, 2, {0, 0}, {0, 0, 0}}).value == 0);
    CHECK(weakL_complete_bipartite({2, 2, 2, {2, 1}, {1, 1}}).value == 2);
    for (int k = 1; k <= 3; ++k)
        check_against_oracle({1, 1, k, {k}, {k}});
    // Weight concentrated on one side beyond its size.
    auto wide = weakL_complete_bipartite({5, 1, 3, {3, 3, 3, 3, 3}, {3}});
    CHECK(wide.value == 3);
    CHECK(wide.y == 3);
}

TEST_CASE("bipartite solver agrees with the oracle")
{
    for (int k = 1; k <= 2; ++k)
        for (int n1 = 1; n1 <= 3; ++n1)
            for (int n2 = 1; n2 <= 3; ++n2) {
                int combos = 1;
                for (int i = 0; i < n1 + n2; ++i)
                    combos *= k + 1;
                for (int code = 0; code < combos; ++code) {
                    BipartiteInstance inst{n1, n2, k, {}, {}};
                    for (int i = 0, c = code; i < n1 + n2; ++i, c /= k + 1)
                        (i < n1 ? inst.b1 : inst.b2).push_back(c % (k + 1));
                    check_against_oracle(inst);
                }
            }
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        BipartiteInstance inst{1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 4), 3, {}, {}};
        for (int i = 0; i < inst.n1; ++i)
            inst.b1.push_back(static_cast<int>(rng() % 4));
        for (int i = 0; i < inst.n2; ++i)
            inst.b2.push_back(static_cast<int>(rng() % 4));
        check_against_oracle(inst);
    }
}

TEST_CASE("complete bipartite recognition")
{
    Edge k23[] = {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    auto sides = complete_bipartite_sides(Graph(5, k23));
    REQUIRE(sides);
    CHECK(sides->first == VertexSet{0, 1, 2});
    CHECK(sides->second == VertexSet{3, 4});

    Edge shuffled[] = {{0, 2}, {1, 2}, {1, 0}};
    CHECK_FALSE(complete_bipartite_sides(Graph(3, shuffled)));
    Edge star[] = {{1, 0}, {1, 2}, {1, 3}};
    sides = complete_bipartite_sides(Graph(4, star));
    REQUIRE(sides);
    CHECK(sides->second == VertexSet{1});
    Edge p4[] = {{0, 1}, {1, 2}, {2, 3}};
    CHECK_FALSE(complete_bipartite_sides(Graph(4, p4)));
    CHECK(complete_bipartite_sides(Graph(1)));
    CHECK_FALSE(complete_bipartite_sides(Graph(2)));
    Edge c4[] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    CHECK(complete_bipartite_sides(Graph(4, c4)));
}
