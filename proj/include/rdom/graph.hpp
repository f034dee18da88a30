#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

enum class ParseErrorKind {
    malformed,
    out_of_range,
    duplicate_edge,
    self_loop,
    repeated_item,
    missing_item,
    invalid_structure,
};

std::string_view to_string(ParseErrorKind kind);

/// Raised by every text-format reader in the library.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string & what);

    ParseErrorKind kind() const noexcept { return kind_; }
    /// 1-based line of the offending input, 0 when not line-oriented.
    int line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

/// Simple undirected graph on the dense vertex range [0, n). Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph & other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

Graph parse_graph(std::string_view text);
std::string render_graph(const Graph & g);

VertexSet closed_neighborhood(const Graph & g, Vertex v);

/// G □ K_k; vertex (v, c) has index v * k + c.
Graph cartesian_product_complete(const Graph & g, int k);

Graph complement(const Graph & g);
Graph disjoint_union(const Graph & a, const Graph & b);
Graph join(const Graph & a, const Graph & b);

/// Induced subgraph on `vertices` (given order); vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph & g, std::span<const Vertex> vertices);

/// Components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph & g);

bool is_clique(const Graph & g, std::span<const Vertex> vertices);
bool is_independent(const Graph & g, std::span<const Vertex> vertices);

/// Canonical adjacency code: equal iff the graphs are isomorphic. Requires n <= 11.
std::string canonical_form(const Graph & g);

/// Relabels `g` by `perm` (new index of old vertex v is perm[v]).
Graph relabel(const Graph & g, std::span<const Vertex> perm);

} // namespace rdom
