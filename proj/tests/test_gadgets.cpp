#include "doctest.h"
#include "rdom/gadgets.hpp"

#include <random>

using namespace rdom;

namespace {

Graph random_split(std::mt19937_64 & rng, int c, int i, double p)
{
    std::vector<Edge> edges;
    for (int u = 0; u < c; ++u)
        for (int v = u + 1; v < c; ++v)
            edges.emplace_back(u, v);
    std::bernoulli_distribution coin(p);
    for (int u = c; u < c + i; ++u)
        for (int v = 0; v < c; ++v)
            if (coin(rng))
                edges.emplace_back(v, u);
    return Graph(c + i, edges);
}

} // namespace

TEST_CASE("split partitions")
{
    auto k4 = parse_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
    auto p = split_partition(k4);
    REQUIRE(p);
    CHECK(p->clique.size() == 4);
    CHECK(p->independent.empty());

    auto star = parse_graph("4 3\n0 1\n0 2\n0 3");
    auto s = split_partition(star);
    REQUIRE(s);
    CHECK(s->clique.size() == 2);
    CHECK(s->independent.size() == 2);
    CHECK(std::find(s->clique.begin(), s->clique.end(), 0) != s->clique.end());
    CHECK(is_split_partition(star, *s));
    CHECK(is_maximal_clique_side(star, *s));

    CHECK_FALSE(split_partition(parse_graph("4 4\n0 1\n1 2\n2 3\n3 0")));
    CHECK_FALSE(split_partition(parse_graph("4 2\n0 1\n2 3")));
}

TEST_CASE("split partition text")
{
    auto part = parse_split_partition("0 1\n2 3\n", 4);
    CHECK(part.clique == VertexSet{0, 1});
    CHECK(render_split_partition(part) == "0 1\n2 3\n");
    CHECK_THROWS_AS(parse_split_partition("0 1\n1 2 3\n", 4), ParseError);
    CHECK_THROWS_AS(parse_split_partition("0 1\n2\n", 4), ParseError);
    CHECK_THROWS_AS(parse_split_partition("0 9\n1 2 3\n", 4), ParseError);
}

TEST_CASE("pendant gadget construction")
{
    auto k2 = parse_graph("2 1\n0 1");
    SplitPartition part{{0, 1}, {}};
    CHECK(pendant_gadget(k2, part, 1).graph == k2);
    auto g3 = pendant_gadget(k2, part, 3);
    CHECK(g3.graph.order() == 6);
    CHECK(g3.pendants[0].size() == 2);
    CHECK(g3.attached_to.size() == 4);
    CHECK(is_split_partition(g3.graph, g3.partition));
    CHECK(split_partition(g3.graph));

    auto star = parse_graph("4 3\n0 1\n0 2\n0 3");
    auto s = *split_partition(star);
    auto gs = pendant_gadget(star, s, 2);
    CHECK(gs.graph.order() == 6);
    for (Vertex c : s.clique)
        CHECK(gs.pendants[c].size() == 1);
}

TEST_CASE("pendant normalization")
{
    auto k2 = parse_graph("2 1\n0 1");
    auto gadget = pendant_gadget(k2, {{0, 1}, {}}, 3);
    RainbowFunction f(3, 6);
    f.labels[0] = 0b000;
    f.labels[1] = 0b111;
    f.labels[2] = 0b111;
    f.labels[3] = 0b000;
    f.labels[4] = 0b000;
    f.labels[5] = 0b000;
    auto n = normalize_pendant_labels(gadget, f);
    CHECK(n.labels[2] == 0b001);
    CHECK(n.labels[0] == 0b110);
    WeightFunction w(3, 6);
    w.weights[2] = 3;
    auto nw = normalize_pendant_weights(gadget, w);
    CHECK(nw.weights[2] == 1);
    CHECK(nw.weights[0] == 2);
}

TEST_CASE("gadget identities")
{
    auto k2 = parse_graph("2 1\n0 1");
    auto r = verify_gadget_identities(k2, {{0, 1}, {}}, 2);
    CHECK(r.domination == 1);
    CHECK(r.rainbow == 3);
    CHECK(r.weak == 3);
    CHECK(r.ok());

    auto star = parse_graph("4 3\n0 1\n0 2\n0 3");
    auto rs = verify_gadget_identities(star, *split_partition(star), 2);
    CHECK(rs.expected == 3);
    CHECK(rs.ok());

    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
        const int c = 1 + static_cast<int>(rng() % 4), i = static_cast<int>(rng() % 3);
        auto g = random_split(rng, c, i, 0.5);
        auto part = split_partition(g);
        REQUIRE(part);
        for (int k = 1; k <= 3; ++k)
            CHECK(verify_gadget_identities(g, *part, k, {64, 0}).ok());
    }
}
