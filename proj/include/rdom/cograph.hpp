#pragma once

#include "rdom/graph.hpp"
#include "rdom/semantics.hpp"

#include <array>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rdom {

/// Binary cotree. Children always precede their parent in `nodes`, so a
/// forward scan is a post-order traversal.
struct Cotree {
    enum class Kind { leaf, union_, join };

    struct Node {
        Kind kind = Kind::leaf;
        int left = -1;
        int right = -1;
        Vertex vertex = -1; ///< leaves only
        int size = 1;       ///< number of leaves below
    };

    std::vector<Node> nodes;
    int root = -1;

    int leaf_count() const { return root < 0 ? 0 : nodes[root].size; }

    int add_leaf(Vertex v);
    int add_internal(Kind kind, int left, int right);
};

/// "(J (U 0 1) 2)"; leaves must be exactly 0..n-1, internal nodes binary.
Cotree parse_cotree(std::string_view text);
std::string render_cotree(const Cotree & t);

Graph cotree_to_graph(const Cotree & t);

/// Vertices a-b-c-d of an induced path.
struct InducedP4 {
    std::array<Vertex, 4> path{};
};

/// Cotree of g, or an induced P4 proving g is not a cograph. Quadratic.
std::variant<Cotree, InducedP4> recognize_cograph(const Graph & g);

/// Finds an induced P4 inside `vertices` of g, if any.
std::optional<InducedP4> find_induced_p4(const Graph & g, std::span<const Vertex> vertices);

inline constexpr int infinite_cost = std::numeric_limits<int>::max() / 4;

inline int saturating_add(int a, int b)
{
    return (a >= infinite_cost || b >= infinite_cost) ? infinite_cost : std::min(a + b, infinite_cost);
}

struct RainbowTable {
    std::vector<int> plus;  ///< per node: max(size, k)
    std::vector<int> minus; ///< per node; infinite_cost when no function has an empty label
};

struct CographOptions {
    /// Mutation switch used by the harness self-test: removes the 2k branch at joins.
    bool drop_join_2k = false;
};

struct CographRainbowResult {
    int value = 0;
    RainbowFunction witness;
    RainbowTable table;
};

CographRainbowResult rainbow_cograph(const Cotree & t, int k, const CographOptions & options = {});

/// W[node][q] for q in 0..k.
using WeakTable = std::vector<std::vector<int>>;

struct CographWeightResult {
    int value = 0;
    WeightFunction witness;
    WeakTable table;
};

CographWeightResult weak_cograph(const Cotree & t, int k);

/// {k}-domination: every closed neighbourhood carries weight at least k.
CographWeightResult kdom_cograph(const Cotree & t, int k);

} // namespace rdom
