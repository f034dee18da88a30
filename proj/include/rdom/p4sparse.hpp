#pragma once

#include "rdom/graph.hpp"
#include "rdom/semantics.hpp"

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rdom {

/// Feet S, body K, head T. Thin: s_i ~ k_i only; thick: s_i ~ K \ {k_i}.
/// S independent, K clique, T complete to K and anticomplete to S.
struct SpiderPartition {
    VertexSet feet;  ///< feet[i] is matched to body[i]
    VertexSet body;
    VertexSet head;
    bool thick = false;
};

/// Verifies the spider definition on g[feet ∪ body ∪ head].
bool is_spider(const Graph & g, const SpiderPartition & spider);

/// Decomposition tree with union, join and spider nodes. Children precede
/// parents in `nodes`. A spider node stores its feet and body directly and
/// points at the decomposition of its head (or -1 when the head is empty).
struct P4SparseTree {
    enum class Kind { leaf, union_, join, spider };

    struct Node {
        Kind kind = Kind::leaf;
        int left = -1;
        int right = -1;
        Vertex vertex = -1;
        int size = 1;
        bool thick = false;
        std::vector<Vertex> feet;
        std::vector<Vertex> body;
        int head = -1;
    };

    std::vector<Node> nodes;
    int root = -1;

    int vertex_count() const { return root < 0 ? 0 : nodes[root].size; }

    int add_leaf(Vertex v);
    int add_internal(Kind kind, int left, int right);
    int add_spider(bool thick, std::vector<Vertex> feet, std::vector<Vertex> body, int head);
};

/// Cotree grammar plus "(S thin|thick (feet...) (body...) head)", head "()" when empty.
P4SparseTree parse_p4sparse(std::string_view text);
std::string render_p4sparse(const P4SparseTree & t);

Graph p4sparse_to_graph(const P4SparseTree & t);

/// Five vertices inducing at least two P4s.
struct P4SparseRefusal {
    std::array<Vertex, 5> vertices{};
};

std::variant<P4SparseTree, P4SparseRefusal> recognize_p4sparse(const Graph & g);

/// Number of induced P4s among the given vertices (brute force over 4-subsets).
int count_induced_p4(const Graph & g, std::span<const Vertex> vertices);

/// True iff every 5-subset induces at most one P4. Exhaustive; small graphs only.
bool is_p4sparse_bruteforce(const Graph & g);

/// Closed forms for a single spider with |S| feet on |V| vertices.
int rainbow_thin_spider(int feet, int vertices, int k);
int rainbow_thick_spider(int feet, int vertices, int k);

struct P4SparseRainbowResult {
    int value = 0;
    RainbowFunction witness;
};

P4SparseRainbowResult rainbow_p4sparse(const P4SparseTree & t, int k);

} // namespace rdom
