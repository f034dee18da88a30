#pragma once

#include "rdom/graph.hpp"
#include "rdom/semantics.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rdom {

/// Complete bipartite graph K_{n1,n2} with b-labels per side; all a-labels are zero.
/// Side V is vertices 0..n1-1, side V' is n1..n1+n2-1.
struct BipartiteInstance {
    int n1 = 0;
    int n2 = 0;
    int k = 1;
    std::vector<int> b1;
    std::vector<int> b2;
};

/// Throws std::invalid_argument on size mismatch or labels outside 0..k.
void validate_bipartite(const BipartiteInstance & inst);

/// File format: "n1 n2 k", then n1 b-values, then n2 b'-values (any whitespace).
BipartiteInstance parse_bipartite(std::string_view text);
std::string render_bipartite(const BipartiteInstance & inst);

Graph bipartite_graph(const BipartiteInstance & inst);
KAssignment bipartite_assignment(const BipartiteInstance & inst);

/// Inverse of bipartite_assignment on K_{n1,n2}; throws std::invalid_argument on a nonzero a-label.
BipartiteInstance bipartite_instance(int n1, int n2, const KAssignment & labels);

/// Sides (V, V') when g is exactly K_{|V|,|V'|}; V holds vertex 0. Edgeless graphs
/// qualify only on at most one vertex.
std::optional<std::pair<VertexSet, VertexSet>> complete_bipartite_sides(const Graph & g);

struct BipartiteWeightResult {
    int value = 0;
    int x = 0; ///< total weight on V
    int y = 0; ///< total weight on V'
    WeightFunction witness;
};

BipartiteWeightResult weakL_complete_bipartite(const BipartiteInstance & inst);

} // namespace rdom
