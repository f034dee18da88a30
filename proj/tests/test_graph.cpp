#include "doctest.h"
#include "rdom/graph.hpp"

using namespace rdom;

namespace {

Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

ParseErrorKind parse_kind(std::string_view text)
{
    try {
        parse_graph(text);
    } catch (const ParseError & err) {
        return err.kind();
    }
    FAIL("expected parse error");
    return ParseErrorKind::malformed;
}

} // namespace

TEST_CASE("parse_graph reads edge lists")
{
    auto p3 = parse_graph("3 2\n0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(2, 1));
    CHECK_FALSE(p3.adjacent(0, 2));

    auto k1 = parse_graph("1 0");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
}

TEST_CASE("parse_graph distinguishes error kinds")
{
    CHECK(parse_kind("2 1\n0 0") == ParseErrorKind::self_loop);
    CHECK(parse_kind("2 1\n0 2") == ParseErrorKind::out_of_range);
    CHECK(parse_kind("3 2\n0 1\n1 0") == ParseErrorKind::duplicate_edge);
    CHECK(parse_kind("3 1\n0 x") == ParseErrorKind::malformed);
    CHECK(parse_kind("3 2\n0 1") == ParseErrorKind::malformed);
}

TEST_CASE("render and parse round trip")
{
    auto g = cycle(7);
    CHECK(parse_graph(render_graph(g)) == g);
}

TEST_CASE("closed neighborhoods")
{
    CHECK(closed_neighborhood(cycle(4), 0) == VertexSet{0, 1, 3});
    CHECK(closed_neighborhood(Graph(1), 0) == VertexSet{0});
    auto k4 = complement(Graph(4));
    CHECK(closed_neighborhood(k4, 2) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("cartesian product with a complete graph")
{
    auto k3 = cartesian_product_complete(Graph(1), 3);
    CHECK(k3 == complement(Graph(3)));

    std::vector<Edge> e{{0, 1}};
    Graph p2(2, e);
    CHECK(cartesian_product_complete(p2, 1) == p2);

    auto c6 = cycle(6);
    auto prism = cartesian_product_complete(c6, 2);
    CHECK(prism.order() == 12);
    CHECK(prism.size() == 6 + 6 * 2);
    CHECK(prism.adjacent(0 * 2 + 0, 0 * 2 + 1));
    CHECK(prism.adjacent(0 * 2 + 1, 1 * 2 + 1));
    CHECK_FALSE(prism.adjacent(0 * 2 + 0, 1 * 2 + 1));

    CHECK_THROWS_AS(cartesian_product_complete(c6, 0), std::invalid_argument);
}

TEST_CASE("product edge count formula")
{
    auto g = cycle(5);
    for (int k = 1; k <= 4; ++k) {
        auto p = cartesian_product_complete(g, k);
        CHECK(p.order() == 5 * k);
        CHECK(p.size() == static_cast<std::size_t>(5 * k * (k - 1) / 2 + 5 * k));
    }
}

TEST_CASE("graph constructor rejects bad edges")
{
    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(2, loop), std::invalid_argument);
    std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(2, dup), std::invalid_argument);
}

TEST_CASE("components, union, join")
{
    auto g = disjoint_union(cycle(3), Graph(2));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    auto j = join(Graph(2), Graph(2));
    CHECK(j.size() == 4);
    CHECK(is_independent(j, std::vector<Vertex>{0, 1}));
    CHECK(is_clique(j, std::vector<Vertex>{0, 2}));
}

TEST_CASE("canonical form detects isomorphism")
{
    auto c6 = cycle(6);
    std::vector<Vertex> perm{3, 5, 0, 2, 4, 1};
    CHECK(canonical_form(relabel(c6, perm)) == canonical_form(c6));
    auto two_triangles = disjoint_union(cycle(3), cycle(3));
    CHECK(canonical_form(two_triangles) != canonical_form(c6));
}
