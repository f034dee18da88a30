#pragma once

#include "rdom/graph.hpp"
#include "rdom/interval.hpp"
#include "rdom/semantics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rdom {

/// Segment i joins top position i to bottom position image[i] (both 0-based).
struct PermutationDiagram {
    std::vector<int> image;

    int order() const { return static_cast<int>(image.size()); }
};

/// Throws std::invalid_argument unless image is a bijection on 0..n-1.
void validate_diagram(const PermutationDiagram & d);

/// File format: one line with the 1-based images pi(1) .. pi(n).
PermutationDiagram parse_permutation(std::string_view text);
std::string render_permutation(const PermutationDiagram & d);

/// Inversion graph: i ~ j iff the segments cross.
Graph diagram_to_graph(const PermutationDiagram & d);

/// Mirror image of the diagram (left and right swapped); same graph up to relabelling.
PermutationDiagram reverse_diagram(const PermutationDiagram & d);
/// Top and bottom lines swapped (inverse permutation); same graph up to relabelling.
PermutationDiagram inverse_diagram(const PermutationDiagram & d);

struct PermutationRainbowResult {
    int value = 0;
    RainbowFunction witness;
    SweepStats stats;
};

struct PermutationWeightResult {
    int value = 0;
    WeightFunction witness;
    SweepStats stats;
};

/// 2-rainbow domination by a sweep over the segments in top order.
PermutationRainbowResult rainbow2_permutation(const PermutationDiagram & d);

/// Weak {2}-domination by the same sweep with weights.
PermutationWeightResult weak2_permutation(const PermutationDiagram & d);

} // namespace rdom
