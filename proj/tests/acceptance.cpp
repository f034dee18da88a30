// One pass/fail line per acceptance criterion. Exit status 0 iff all pass.
#include "rdom/harness.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

using namespace rdom;

namespace {

struct Criterion {
    int number;
    const char * check;
    const char * title;
    double limit_seconds;
};

const Criterion criteria[] = {
    {1, "known_constants", "C6 and witness-graph constants by oracle and cograph solvers", 1},
    {2, "product_identity", "product identity and cross-oracle agreement, n <= 5, k <= 2", 300},
    {3, "global_invariants", "bounds, Vizing-type bound, weak <= rainbow, k-monotonicity on 500 graphs", 600},
    {4, "cograph", "cograph rainbow and weak solvers on all cographs up to 8 vertices, k <= 3", 900},
    {5, "p4sparse", "spider formulas on the grid and P4-sparse solver up to 8 vertices", 1200},
    {6, "trivially_perfect", "weak kL, reduction and (j,k) on trivially perfect graphs up to 8 vertices", 1800},
    {7, "interval", "interval weak 2 and rainbow 2 on all interval graphs up to 8 vertices", 1800},
    {8, "permutation", "permutation rainbow 2 on all permutations up to size 8", 3600},
    {9, "complete_bipartite", "complete bipartite weak kL, exhaustive k <= 2 and 1000 random k = 3", 1200},
    {10, "gadgets", "pendant gadget identities on 200 random splitgraphs, k <= 3", 1800},
    {11, "scalability", "scalability gates (cograph, trivially perfect, interval, permutation)", 300},
};

} // namespace

int main(int argc, char ** argv)
{
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    CertificationPlan plan = default_plan(seed);
    plan.workers = 1;
    auto report = run_plan(plan);
    int failed = 0;
    for (const auto & c : criteria) {
        const CheckResult * r = nullptr;
        for (const auto & x : report.checks)
            if (x.name == c.check)
                r = &x;
        const bool in_time = r && r->seconds < c.limit_seconds;
        const bool ok = r && r->passed && in_time;
        failed += ! ok;
        std::printf("%s criterion %2d: %s [%.2f s of %.0f s] %s\n", ok ? "PASS" : "FAIL", c.number, c.title,
            r ? r->seconds : 0.0, c.limit_seconds, r ? r->detail.c_str() : "check missing");
        if (r && ! r->passed && r->counterexample)
            std::printf("  counterexample: %s\n  replay: %s\n", r->counterexample->dump().c_str(), r->replay.c_str());
        if (r && ! r->measurements.empty())
            std::printf("  timings: %s\n", r->measurements.dump().c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
