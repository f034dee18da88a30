#pragma once

#include "rdom/graph.hpp"
#include "rdom/semantics.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rdom {

/// Rooted forest; x ~ y in the modelled graph iff one is a proper ancestor of the other.
struct RootedTreeModel {
    std::vector<Vertex> parent; ///< -1 for roots

    int order() const { return static_cast<int>(parent.size()); }
    std::vector<Vertex> roots() const;
    std::vector<std::vector<Vertex>> children() const;
};

/// Throws std::invalid_argument on cycles or out-of-range parents.
void validate_tree_model(const RootedTreeModel & model);

/// File format: n lines "v parent", parent -1 for a root.
RootedTreeModel parse_tree_model(std::string_view text);
std::string render_tree_model(const RootedTreeModel & model);

Graph tree_model_to_graph(const RootedTreeModel & model);

/// Induced P4 (a-b-c-d) or C4 (a-b-c-d-a) certifying the graph is not trivially perfect.
struct TreeModelRefusal {
    std::array<Vertex, 4> vertices{};
    bool cycle = false;
};

/// Universal-vertex peeling on every component.
std::variant<RootedTreeModel, TreeModelRefusal> build_tree_model(const Graph & g);

/// Fixed-weight vertices and vertices already satisfied are removed; the
/// remaining vertices keep the induced ancestor relation. Non-root vertices
/// end up with a = 0.
struct ReducedInstance {
    RootedTreeModel model;         ///< over the kept vertices, renumbered 0..m-1
    KAssignment labels;            ///< for the renumbered vertices
    std::vector<Vertex> original;  ///< original[i] is the input vertex of reduced vertex i
    std::vector<int> fixed_weight; ///< weight forced on every input vertex that was removed (-1 when kept)
    int offset = 0;
};

ReducedInstance reduce_instance(const RootedTreeModel & model, const KAssignment & labels);

/// Chains below a branching vertex, each sorted by demand, and all entries ranked by d.
struct DescendantOrder {
    struct Entry {
        Vertex vertex;
        int chain;
        int position; ///< 1-based within the chain after sorting
        int d;
    };
    std::vector<std::vector<Vertex>> chains; ///< per chain, sorted by b non-increasing
    std::vector<Entry> merged;               ///< all entries by d non-increasing
};

/// Requires every subtree below x to be a path. `b` holds current demands.
DescendantOrder descendant_order(const RootedTreeModel & model, std::span<const int> b, Vertex x);

struct TreeWeightResult {
    int value = 0;
    WeightFunction witness;
};

/// Reduces, then runs an O(k n) programme over (vertex, ancestor weight capped at k).
TreeWeightResult gamma_wkL(const RootedTreeModel & model, const KAssignment & labels);
TreeWeightResult gamma_wk_tp(const RootedTreeModel & model, int k);

/// gamma_rk equals gamma_wk on this class; value only.
int gamma_rk_tp(const RootedTreeModel & model, int k);

/// BFS-level rule. nullopt when no (j,k)-dominating function exists.
std::optional<TreeWeightResult> jk_domination_tp(const RootedTreeModel & model, int j, int k);

} // namespace rdom
