#include "doctest.h"
#include "solve.hpp"

using namespace rdom;
using namespace rdom::cli;

namespace {

int oracle_value(const Graph & g, Problem problem, int k, int j, const std::optional<KAssignment> & labels)
{
    if (problem == Problem::rainbow)
        return exact_rainbow(g, k, {40}).value;
    WeightVariant v;
    switch (problem) {
    case Problem::weak: v = WeightVariant::weak_k(); break;
    case Problem::kdom: v = WeightVariant::k_dom(); break;
    case Problem::jkdom: v = WeightVariant::jk_dom(j); break;
    default: v = WeightVariant::weak_kL(*labels); break;
    }
    auto r = exact_weight_variant(g, v, k);
    return r ? r->value : -1;
}

} // namespace

TEST_CASE("auto dispatch agrees with the oracle")
{
    const std::pair<const char *, std::vector<int>> families[] = {{"random_cotree", {7}}, {"random_tree", {8}},
        {"random_interval", {8}}, {"random_permutation", {7}}, {"complete_bipartite", {3, 3}}, {"thin_spider", {3, 1}},
        {"random", {7}}};
    for (const auto & [family, params] : families)
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            auto gen = generate(family, params, 0.4, seed);
            const int n = gen.graph.order();
            for (bool with_model : {false, true})
                for (auto problem : {Problem::rainbow, Problem::weak, Problem::kdom, Problem::jkdom, Problem::weakL})
                    for (int k = 1; k <= 3; ++k) {
                        Inputs in{gen.graph, with_model ? gen.model : StructureModel{}, std::nullopt};
                        Rng rng(seed * 31 + static_cast<std::uint64_t>(k));
                        if (problem == Problem::weakL)
                            in.labels = random_assignment(n, k, rng);
                        if (std::holds_alternative<BipartiteInstance>(in.model)) {
                            if (problem != Problem::weakL)
                                continue;
                            auto inst = std::get<BipartiteInstance>(in.model);
                            inst.k = k;
                            for (auto * side : {&inst.b1, &inst.b2})
                                for (auto & b : *side)
                                    b = uniform_int(rng, 0, k);
                            in.model = inst;
                            in.labels = bipartite_assignment(inst);
                        }
                        SolveRequest req{problem, k, problem == Problem::jkdom ? 1 + (k > 1) : 0, SolverClass::automatic,
                            {40}};
                        CAPTURE(family);
                        CAPTURE(seed);
                        CAPTURE(with_model);
                        CAPTURE(static_cast<int>(problem));
                        CAPTURE(k);
                        const int want = oracle_value(gen.graph, problem, k, req.j, in.labels);
                        try {
                            auto got = solve(req, in);
                            CHECK(got.value == want);
                            CHECK(got.witness["value"] == want);
                        } catch (const Infeasible &) {
                            CHECK(want == -1);
                        }
                    }
        }
}

TEST_CASE("incompatible requests are refused")
{
    auto c6 = generate("cycle", {6}, 0, 1);
    Inputs in{c6.graph, {}, std::nullopt};
    CHECK_THROWS_AS(solve({Problem::rainbow, 2, 0, SolverClass::cograph, {}}, in), UsageError);
    CHECK_THROWS_AS(solve({Problem::rainbow, 3, 0, SolverClass::interval, {}}, in), UsageError);
    CHECK_THROWS_AS(solve({Problem::weakL, 2, 0, SolverClass::automatic, {}}, in), UsageError);
    CHECK_THROWS_AS(solve({Problem::jkdom, 2, 3, SolverClass::oracle, {}}, in), UsageError);
    CHECK_THROWS_AS(solve({Problem::weak, 2, 0, SolverClass::oracle, {4}}, in), OracleCapExceeded);
    CHECK(solve({Problem::weak, 2, 0, SolverClass::automatic, {}}, in).used == SolverClass::oracle);
}
