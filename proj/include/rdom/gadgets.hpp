#pragma once

#include "rdom/graph.hpp"
#include "rdom/oracle.hpp"
#include "rdom/semantics.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdom {

struct SplitPartition {
    VertexSet clique;      ///< C
    VertexSet independent; ///< I
};

/// Checks disjointness, coverage, clique and independence; maximality of C is
/// not required.
bool is_split_partition(const Graph & g, const SplitPartition & part);
/// True when no vertex of I is adjacent to all of C.
bool is_maximal_clique_side(const Graph & g, const SplitPartition & part);

/// Degree-sequence split followed by growing C to a maximal clique; nullopt if g is not split.
std::optional<SplitPartition> split_partition(const Graph & g);

/// File format: two lines, the vertices of C then the vertices of I.
SplitPartition parse_split_partition(std::string_view text, int n);
std::string render_split_partition(const SplitPartition & part);

/// G' = G plus k-1 pendant vertices on every vertex of C. Original vertices keep
/// their indices; pendants follow.
struct PendantGadget {
    Graph graph;
    SplitPartition partition; ///< C unchanged, I extended by the pendants
    int original_order = 0;
    int k = 1;
    std::vector<Vertex> attached_to;         ///< per pendant (index minus original_order), its clique vertex
    std::vector<std::vector<Vertex>> pendants; ///< per original vertex, its pendants
};

PendantGadget pendant_gadget(const Graph & g, const SplitPartition & part, int k);

/// Pendants carrying two or more colours keep the smallest and pass the rest to
/// their clique vertex. Preserves validity; cost does not increase.
RainbowFunction normalize_pendant_labels(const PendantGadget & gadget, const RainbowFunction & f);
/// Pendant weights above 1 are cut to 1; the excess moves to the clique vertex (capped at k).
WeightFunction normalize_pendant_weights(const PendantGadget & gadget, const WeightFunction & w);

/// Original vertices carrying a nonempty label / positive weight.
VertexSet decode_dominating_set(const PendantGadget & gadget, const RainbowFunction & f);
VertexSet decode_dominating_set(const PendantGadget & gadget, const WeightFunction & w);

struct GadgetReport {
    int k = 1;
    int domination = 0;    ///< gamma(G)
    int clique_size = 0;   ///< |C|
    int expected = 0;      ///< gamma(G) + |C|(k-1)
    int rainbow = 0;       ///< gamma_rk(G')
    int weak = 0;          ///< gamma_wk(G')
    bool rainbow_decodes = false; ///< decoded set dominates G within the bound
    bool weak_decodes = false;

    bool ok() const { return rainbow == expected && weak == expected && rainbow_decodes && weak_decodes; }
};

/// Throws OracleCapExceeded when G' (or G' times K_k) exceeds the oracle cap.
GadgetReport verify_gadget_identities(const Graph & g, const SplitPartition & part, int k, const OracleConfig & config = {});

} // namespace rdom
