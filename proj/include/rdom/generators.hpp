#pragma once

#include "rdom/bipartite.hpp"
#include "rdom/cograph.hpp"
#include "rdom/gadgets.hpp"
#include "rdom/graph.hpp"
#include "rdom/interval.hpp"
#include "rdom/p4sparse.hpp"
#include "rdom/permutation.hpp"
#include "rdom/random.hpp"
#include "rdom/semantics.hpp"
#include "rdom/trivially_perfect.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rdom {

/// Class-specific certificate accompanying a graph.
using StructureModel = std::variant<std::monostate, Cotree, P4SparseTree, RootedTreeModel, IntervalModel,
    PermutationDiagram, BipartiteInstance, SplitPartition>;

struct Generated {
    Graph graph;
    StructureModel model;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Generated complete_bipartite(int n1, int n2);
/// Spider with s feet and a clique head of h vertices. Feet 0..s-1, body s..2s-1, head after.
Generated thin_spider(int s, int h);
Generated thick_spider(int s, int h);
Graph random_graph(int n, double p, Rng & rng);
/// Clique 0..c-1 and independent c..c+i-1, each cross edge with probability p.
/// The returned partition has C grown to a maximal clique.
Generated random_splitgraph(int c, int i, double p, Rng & rng);
/// The 12-vertex cograph with gamma_w3 = 4 and gamma_r3 = 6.
Generated gap_cograph();

Cotree random_cotree(int leaves, Rng & rng);
RootedTreeModel random_tree_model(int n, Rng & rng);
IntervalModel random_interval_model(int n, Rng & rng);
PermutationDiagram random_permutation(int n, Rng & rng);
KAssignment random_assignment(int n, int k, Rng & rng);

/// Names accepted by generate().
const std::vector<std::string> & family_names();

/// Family by name with integer parameters; throws std::invalid_argument on
/// unknown families or bad parameters.
Generated generate(std::string_view family, const std::vector<int> & params, double p, std::uint64_t seed);

/// Text form of a model in its owning module's file format ("" for none).
std::string render_model(const StructureModel & model);
/// Conventional file suffix for the model kind.
std::string model_suffix(const StructureModel & model);

} // namespace rdom
