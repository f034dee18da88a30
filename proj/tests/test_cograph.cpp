#include "doctest.h"
#include "rdom/cograph.hpp"
#include "rdom/oracle.hpp"

using namespace rdom;

namespace {

const char * gap = "(J (U (J 0 (U 1 2)) (J 3 (U 4 5))) (U (J 6 (U 7 8)) (J 9 (U 10 11))))";

ParseErrorKind cotree_error(std::string_view text)
{
    try {
        parse_cotree(text);
    } catch (const ParseError & err) {
        return err.kind();
    }
    FAIL("expected parse error");
    return ParseErrorKind::malformed;
}

} // namespace

TEST_CASE("parse and render cotrees")
{
    auto t = parse_cotree("(U 0 1)");
    CHECK(t.leaf_count() == 2);
    CHECK(cotree_to_graph(t).size() == 0);
    auto k3 = cotree_to_graph(parse_cotree("(J 0 (J 1 2))"));
    CHECK(k3.size() == 3);
    CHECK(render_cotree(parse_cotree(gap)) == gap);
    CHECK(cotree_error("(U 0 0)") == ParseErrorKind::repeated_item);
    CHECK(cotree_error("(U 0 2)") == ParseErrorKind::missing_item);
    CHECK(cotree_error("(U 0 1 2)") == ParseErrorKind::invalid_structure);
    CHECK(cotree_error("(X 0 1)") == ParseErrorKind::malformed);
    CHECK(cotree_error("(U 0 1") == ParseErrorKind::malformed);
    CHECK(parse_cotree("0").leaf_count() == 1);
}

TEST_CASE("recognition")
{
    auto p3 = parse_graph("3 2\n0 1\n1 2");
    auto r = recognize_cograph(p3);
    REQUIRE(std::holds_alternative<Cotree>(r));
    CHECK(cotree_to_graph(std::get<Cotree>(r)) == p3);

    auto p4 = parse_graph("4 3\n0 1\n1 2\n2 3");
    auto refused = recognize_cograph(p4);
    REQUIRE(std::holds_alternative<InducedP4>(refused));
    auto path = std::get<InducedP4>(refused).path;
    CHECK(p4.adjacent(path[0], path[1]));
    CHECK(p4.adjacent(path[1], path[2]));
    CHECK(p4.adjacent(path[2], path[3]));
    CHECK_FALSE(p4.adjacent(path[0], path[2]));

    auto c6 = parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5");
    CHECK(std::holds_alternative<InducedP4>(recognize_cograph(c6)));

    auto g = cotree_to_graph(parse_cotree(gap));
    auto back = recognize_cograph(g);
    REQUIRE(std::holds_alternative<Cotree>(back));
    CHECK(cotree_to_graph(std::get<Cotree>(back)) == g);
}

TEST_CASE("cograph rainbow values")
{
    auto t = parse_cotree(gap);
    auto g = cotree_to_graph(t);
    auto r = rainbow_cograph(t, 3);
    CHECK(r.value == 6);
    CHECK(is_rainbow(g, r.witness).ok);
    CHECK(rainbow_cost(r.witness) == 6);

    for (int k = 1; k <= 4; ++k)
        CHECK(rainbow_cograph(parse_cotree("0"), k).value == 1);
    CHECK(rainbow_cograph(parse_cotree("(U 0 1)"), 2).value == 2);

    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        CHECK(r.table.plus[i] == std::max(t.nodes[i].size, 3));
        if (t.nodes[i].kind == Cotree::Kind::join)
            CHECK(r.table.minus[i] <= 6);
    }
}

TEST_CASE("cograph weak and kdom values")
{
    auto t = parse_cotree(gap);
    auto g = cotree_to_graph(t);
    auto w = weak_cograph(t, 3);
    CHECK(w.value == 4);
    CHECK(is_weak_k(g, w.witness).ok);
    CHECK(weight_cost(w.witness) == 4);

    CHECK(weak_cograph(parse_cotree("(J 0 1)"), 2).value == 2);
    CHECK(kdom_cograph(parse_cotree("0"), 3).value == 3);
    CHECK(kdom_cograph(parse_cotree("(J 0 1)"), 2).value == 2);

    auto kd = kdom_cograph(t, 3);
    CHECK(is_k_dom(g, kd.witness).ok);
    CHECK(kd.value == exact_weight_variant(g, WeightVariant::k_dom(), 3)->value);

    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        CHECK(w.table[i][3] == 0);
        for (int q = 0; q < 3; ++q)
            CHECK(w.table[i][q] >= w.table[i][q + 1]);
    }
}

TEST_CASE("mutation removes the 2k branch")
{
    auto t = parse_cotree("(J (U 0 (U 1 2)) (U 3 (U 4 5)))");
    CHECK(rainbow_cograph(t, 1).value == 2);
    CHECK(rainbow_cograph(t, 1, {.drop_join_2k = true}).value == 3);
}
