#pragma once

#include "rdom/cograph.hpp"
#include "rdom/interval.hpp"
#include "rdom/p4sparse.hpp"
#include "rdom/permutation.hpp"
#include "rdom/trivially_perfect.hpp"

#include <vector>

namespace rdom {

/// One cotree per cograph with 1..max_leaves vertices, up to isomorphism.
std::vector<Cotree> enumerate_cographs(int max_leaves);

/// One decomposition tree per P4-sparse graph with 1..max_vertices vertices,
/// built from unions, joins and spiders, up to isomorphism.
std::vector<P4SparseTree> enumerate_p4sparse(int max_vertices);

/// One rooted forest per trivially perfect graph with 1..max_vertices vertices, up to isomorphism.
std::vector<RootedTreeModel> enumerate_tree_models(int max_vertices);

/// One interval model per interval graph with 1..max_vertices vertices, up to
/// isomorphism. Models are compact: endpoints are clique indices.
std::vector<IntervalModel> enumerate_interval_models(int max_vertices);

/// All permutations of 0..n-1 in lexicographic order.
std::vector<PermutationDiagram> enumerate_permutations(int n);

} // namespace rdom
