#pragma once

#include "rdom/graph.hpp"
#include "rdom/semantics.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace rdom {

/// Limits for the exponential solvers. `vertex_cap` bounds the searched graph
/// (G itself, or G □ K_k for rainbow); the bitset engine cannot exceed 64.
struct OracleConfig {
    int vertex_cap = 24;
    std::uint64_t node_budget = 0; ///< 0 means unlimited
};

inline constexpr int oracle_hard_cap = 64;

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OracleBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class Witness>
struct OracleResult {
    int value = 0;
    Witness witness;
    std::uint64_t nodes_explored = 0;
};

/// Minimum dominating set; the witness carries weight 1 on chosen vertices.
OracleResult<WeightFunction> exact_domination(const Graph & g, const OracleConfig & config = {});

/// gamma_rk through the dominating sets of G □ K_k.
OracleResult<RainbowFunction> exact_rainbow(const Graph & g, int k, const OracleConfig & config = {});

/// gamma_rk by branch and bound directly over label assignments. Independent of
/// the product route; meant for tiny instances (cap applies to n).
OracleResult<RainbowFunction> exact_rainbow_by_labelings(const Graph & g, int k, const OracleConfig & config = {});

struct WeightVariant {
    enum class Kind { weak_k, k_dom, jk_dom, weak_kL };

    Kind kind = Kind::weak_k;
    int j = 0;
    KAssignment assignment;

    static WeightVariant weak_k() { return {}; }
    static WeightVariant k_dom() { return {Kind::k_dom, 0, {}}; }
    static WeightVariant jk_dom(int j) { return {Kind::jk_dom, j, {}}; }
    static WeightVariant weak_kL(KAssignment labels) { return {Kind::weak_kL, 0, std::move(labels)}; }
};

/// Exact minimum of the weight-based variants. Returns nullopt when no
/// feasible function exists (possible only for (j,k)-domination).
std::optional<OracleResult<WeightFunction>> exact_weight_variant(
    const Graph & g, const WeightVariant & variant, int k, const OracleConfig & config = {});

/// Validates `w` under the predicate matching `variant`.
Verdict validate_weight_variant(const Graph & g, const WeightFunction & w, const WeightVariant & variant);

} // namespace rdom
