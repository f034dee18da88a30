#pragma once

#include "rdom/graph.hpp"
#include "rdom/semantics.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rdom {

struct Interval {
    int left = 0;
    int right = 0;
    bool operator==(const Interval &) const = default;
};

struct IntervalModel {
    std::vector<Interval> intervals;
    int order() const { return static_cast<int>(intervals.size()); }
};

/// File format: n lines "v left right".
IntervalModel parse_interval_model(std::string_view text);
std::string render_interval_model(const IntervalModel & model);

Graph interval_model_to_graph(const IntervalModel & model);

/// Maximal cliques in left-to-right order; vertex v lies in cliques first[v]..last[v].
struct CliqueArrangement {
    std::vector<VertexSet> cliques;
    std::vector<int> first;
    std::vector<int> last;

    int order() const { return static_cast<int>(first.size()); }
};

/// Throws std::logic_error if the swept cliques are not consecutive for some vertex.
CliqueArrangement build_arrangement(const IntervalModel & model);

/// Interval model whose endpoints are clique indices.
IntervalModel compact_model(const CliqueArrangement & arrangement);

Graph arrangement_to_graph(const CliqueArrangement & arrangement);

struct SweepStats {
    std::uint64_t states = 0;     ///< states created over the whole sweep
    std::size_t widest_layer = 0; ///< largest number of live states after one step
    int max_twos = 0;             ///< most weight-2 vertices in one state's cover
    int max_ones = 0;             ///< most weight-1 vertices in one state's cover
};

struct IntervalWeightResult {
    int value = 0;
    WeightFunction witness;
    SweepStats stats;
};

struct IntervalRainbowResult {
    int value = 0;
    RainbowFunction witness;
    bool repaired_by_fallback = false;
    SweepStats stats;
};

/// Weak {2}-domination by a left-to-right sweep over the arrangement.
IntervalWeightResult weak2_interval(const CliqueArrangement & arrangement);

/// 2-rainbow domination: value from the weak sweep, labels by greedy colouring of
/// the weight witness, or by a direct label sweep if the colouring fails.
IntervalRainbowResult rainbow2_interval(const CliqueArrangement & arrangement);

/// Direct 2-rainbow sweep (labels instead of weights).
IntervalRainbowResult rainbow2_interval_direct(const CliqueArrangement & arrangement);

} // namespace rdom
