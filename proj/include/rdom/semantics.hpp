#pragma once

#include "rdom/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdom {

/// Bit c-1 is set when colour c is in the label. Colours live in [1, k], k <= 31.
using ColorSet = std::uint32_t;

inline constexpr int max_colors = 31;

inline ColorSet full_colors(int k) { return (ColorSet{1} << k) - 1; }
inline int color_count(ColorSet s) { return __builtin_popcount(s); }

struct RainbowFunction {
    int k = 1;
    std::vector<ColorSet> labels;

    RainbowFunction() = default;
    RainbowFunction(int k, int n);
};

struct WeightFunction {
    int k = 1;
    std::vector<int> weights;

    WeightFunction() = default;
    WeightFunction(int k, int n);
};

struct Label {
    int a = 0;
    int b = 0;
    bool operator==(const Label &) const = default;
};

/// Per-vertex (a_x, b_x): w(x) >= a_x, and w(x) = 0 forces w(N[x]) >= b_x.
struct KAssignment {
    int k = 1;
    std::vector<Label> labels;

    KAssignment() = default;
    KAssignment(int k, int n, Label fill = {});
};

/// Outcome of a validator; `violator` is the smallest vertex breaking the condition.
struct Verdict {
    bool ok = true;
    std::optional<Vertex> violator;

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(Vertex v) { return {false, v}; }
};

/// Throws std::invalid_argument unless 1 <= k <= max_colors.
void require_valid_k(int k);

int rainbow_cost(const RainbowFunction & f);
int weight_cost(const WeightFunction & w);

Verdict is_rainbow(const Graph & g, const RainbowFunction & f);
Verdict is_weak_k(const Graph & g, const WeightFunction & w);
Verdict is_k_dom(const Graph & g, const WeightFunction & w);
Verdict is_jk_dom(const Graph & g, const WeightFunction & w, int j);
Verdict is_weak_kL(const Graph & g, const WeightFunction & w, const KAssignment & labels);

WeightFunction rainbow_to_weight(const RainbowFunction & f);

// Witness text forms: one "v: {c1,c2}" or "v: w" line per vertex.
std::string render_rainbow(const RainbowFunction & f);
RainbowFunction parse_rainbow(std::string_view text, int k);
std::string render_weights(const WeightFunction & w);
WeightFunction parse_weights(std::string_view text, int k);

// KAssignment file: n lines "v a b".
KAssignment parse_assignment(std::string_view text, int k);
std::string render_assignment(const KAssignment & labels);

} // namespace rdom
