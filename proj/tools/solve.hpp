#pragma once

#include "rdom/generators.hpp"
#include "rdom/oracle.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rdom::cli {

enum class Problem { rainbow, weak, kdom, jkdom, weakL };
enum class SolverClass { automatic, cograph, p4sparse, trivially_perfect, interval, permutation, complete_bipartite, oracle };

/// Bad flags, unreadable input or an incompatible problem/class pair (exit 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No function satisfies the constraints (possible only for (j,k)-domination).
class Infeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<Problem> parse_problem(std::string_view name);
std::optional<SolverClass> parse_class(std::string_view name);
std::string_view class_name(SolverClass c);

/// Recognizers that throw UsageError carrying the refusal certificate.
Cotree require_cotree(const Graph & g);
P4SparseTree require_p4tree(const Graph & g);
RootedTreeModel require_tree_model(const Graph & g);

/// Whether `c` has a solver for `problem` at this k.
bool supports(SolverClass c, Problem problem, int k);

struct Inputs {
    std::optional<Graph> graph;
    StructureModel model;
    std::optional<KAssignment> labels;
};

std::string read_file(const std::string & path);

/// Model in the named format ("cotree", "p4tree", "tree", "intervals", "perm",
/// "bipartite", "split").
StructureModel parse_model(std::string_view format, const std::string & text, std::optional<int> order);

/// Model format by file suffix (".cotree", ".p4tree", ".tree", ".intervals", ".perm",
/// ".bipartite", ".split"); a split partition needs the graph order.
StructureModel load_model(const std::string & path, std::optional<int> order);

/// Graph described by a model; nullopt for a split partition.
std::optional<Graph> model_graph(const StructureModel & model);

/// Reads the given files; a graph and a model must describe the same labelled graph,
/// and a .bipartite model supplies the assignment.
Inputs load_inputs(const std::optional<std::string> & graph_path, const std::optional<std::string> & model_path,
    const std::optional<std::string> & assignment_path, int k);

struct SolveRequest {
    Problem problem = Problem::rainbow;
    int k = 1;
    int j = 0;
    SolverClass solver = SolverClass::automatic;
    OracleConfig oracle;
};

struct SolveOutcome {
    int value = 0;
    SolverClass used = SolverClass::oracle;
    nlohmann::ordered_json witness; ///< validated witness document, keys in schema order
};

/// Runs the chosen (or first applicable) solver and validates its witness.
SolveOutcome solve(const SolveRequest & req, const Inputs & inputs);

/// Oracle cap from RAINBOWDOM_ORACLE_CAP, else the default.
OracleConfig oracle_config_from_env();

} // namespace rdom::cli
