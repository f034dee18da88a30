#pragma once

#include "rdom/graph.hpp"
#include "rdom/oracle.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rdom {

struct CheckSpec {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    std::string mutation; ///< empty for none
};

struct CertificationPlan {
    std::uint64_t seed = 1;
    std::vector<CheckSpec> checks;
    int workers = 1;
    bool timing = false; ///< include wall-clock seconds in the report
};

struct CheckResult {
    std::string name;
    bool passed = false;
    bool budget_exhausted = false;
    std::uint64_t instances = 0;
    std::string detail;
    std::optional<nlohmann::json> counterexample;
    std::string replay;
    double seconds = 0;
    nlohmann::json measurements = nlohmann::json::object(); ///< extra timings, reported with timing only
};

struct CertificationReport {
    std::uint64_t seed = 1;
    std::vector<CheckResult> checks;

    bool passed() const;
};

/// Thrown for unknown checks, unknown mutations or malformed plan documents.
class PlanError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Names of the available checks, in default order.
const std::vector<std::string> & check_names();
/// Mutations accepted by a check (deliberately broken solver variants).
std::vector<std::string> check_mutations(const std::string & check);

CertificationPlan default_plan(std::uint64_t seed);
CertificationPlan parse_plan(const nlohmann::json & doc);
nlohmann::json plan_to_json(const CertificationPlan & plan);

/// Runs every check on a bounded worker pool; results keep plan order.
CertificationReport run_plan(const CertificationPlan & plan);

nlohmann::json report_to_json(const CertificationReport & report, bool timing);

/// Outcome of the global relation sweep for one graph.
struct InvariantFailure {
    Graph graph;
    int k = 0;
    std::string relation;
};

/// Checks min(k,n) <= g_rk <= n, g_rk <= k g, g_wk <= g_rk, g_rk <= g_r(k+1), and
/// g_rk = g(G x K_k) on every graph for k in 1..k_max, all by oracle.
std::vector<InvariantFailure> sweep_global_invariants(
    const std::vector<Graph> & corpus, int k_max, const OracleConfig & config = {});

} // namespace rdom
