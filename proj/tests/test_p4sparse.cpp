#include "doctest.h"
#include "rdom/oracle.hpp"
#include "rdom/p4sparse.hpp"

using namespace rdom;

namespace {

// Spider with s feet and a clique head of size h, vertices feet, body, head.
P4SparseTree spider_tree(int s, int h, bool thick)
{
    P4SparseTree t;
    std::vector<Vertex> feet, body;
    for (int i = 0; i < s; ++i) {
        feet.push_back(i);
        body.push_back(s + i);
    }
    int head = -1;
    for (int i = 0; i < h; ++i) {
        int leaf = t.add_leaf(2 * s + i);
        head = head < 0 ? leaf : t.add_internal(P4SparseTree::Kind::join, head, leaf);
    }
    t.root = t.add_spider(thick, feet, body, head);
    return t;
}

} // namespace

TEST_CASE("parse and render spider trees")
{
    const char * text = "(S thin (0 1 2) (3 4 5) ())";
    auto t = parse_p4sparse(text);
    CHECK(t.vertex_count() == 6);
    CHECK(render_p4sparse(t) == text);
    auto g = p4sparse_to_graph(t);
    CHECK(g.size() == 3 + 3);

    auto with_head = parse_p4sparse("(S thick (0 1 2) (3 4 5) (U 6 7))");
    CHECK(with_head.vertex_count() == 8);
    CHECK(render_p4sparse(with_head) == "(S thick (0 1 2) (3 4 5) (U 6 7))");

    CHECK_THROWS_AS(parse_p4sparse("(S thin (0) (1) ())"), ParseError);
    CHECK_THROWS_AS(parse_p4sparse("(S thin (0 1) (2 2) ())"), ParseError);
    CHECK_THROWS_AS(parse_p4sparse("(S fat (0 1) (2 3) ())"), ParseError);
}

TEST_CASE("recognition of spiders, cographs and C5")
{
    for (bool thick : {false, true})
        for (int h = 0; h <= 2; ++h) {
            auto t = spider_tree(3, h, thick);
            auto g = p4sparse_to_graph(t);
            auto r = recognize_p4sparse(g);
            REQUIRE(std::holds_alternative<P4SparseTree>(r));
            auto & back = std::get<P4SparseTree>(r);
            CHECK(p4sparse_to_graph(back) == g);
            CHECK(back.nodes[back.root].kind == P4SparseTree::Kind::spider);
            CHECK(back.nodes[back.root].thick == thick);
        }

    auto c5 = parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n0 4");
    auto r = recognize_p4sparse(c5);
    REQUIRE(std::holds_alternative<P4SparseRefusal>(r));
    CHECK(count_induced_p4(c5, std::get<P4SparseRefusal>(r).vertices) == 5);

    auto p3 = parse_graph("3 2\n0 1\n1 2");
    auto rp3 = recognize_p4sparse(p3);
    REQUIRE(std::holds_alternative<P4SparseTree>(rp3));
    for (const auto & node : std::get<P4SparseTree>(rp3).nodes)
        CHECK(node.kind != P4SparseTree::Kind::spider);
}

TEST_CASE("spider formulas against the oracle")
{
    CHECK(rainbow_thin_spider(3, 6, 2) == 4);
    CHECK(rainbow_thin_spider(2, 4, 1) == 2);
    CHECK(rainbow_thin_spider(2, 14, 3) == 4);
    CHECK(rainbow_thick_spider(3, 6, 1) == 2);
    CHECK(rainbow_thick_spider(3, 6, 2) == 3);
    CHECK(rainbow_thick_spider(4, 10, 3) == 4);

    for (bool thick : {false, true})
        for (int s = 2; s <= 3; ++s)
            for (int h = 0; h <= 2; ++h)
                for (int k = 1; k <= 3; ++k) {
                    auto t = spider_tree(s, h, thick);
                    auto g = p4sparse_to_graph(t);
                    auto r = rainbow_p4sparse(t, k);
                    CAPTURE(thick);
                    CAPTURE(s);
                    CAPTURE(h);
                    CAPTURE(k);
                    CHECK(r.value == exact_rainbow(g, k, {.vertex_cap = 64}).value);
                    CHECK(is_rainbow(g, r.witness).ok);
                    CHECK(rainbow_cost(r.witness) == r.value);
                }
}

TEST_CASE("brute force P4-sparse predicate")
{
    CHECK(is_p4sparse_bruteforce(parse_graph("4 3\n0 1\n1 2\n2 3")));
    CHECK_FALSE(is_p4sparse_bruteforce(parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n0 4")));
    CHECK(is_spider(p4sparse_to_graph(spider_tree(3, 1, true)), {{0, 1, 2}, {3, 4, 5}, {6}, true}));
}
