#include <cstdio>

#include "experiments.hpp"

using namespace qspace;

int main() {
    experiments::SuiteOptions opts;
    int failed = 0;
    experiments::run_suite(opts, [&](const experiments::CriterionResult& r) {
        std::printf("[%s] %2d %s: %s (%.1f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str(),
                    r.seconds);
        std::fflush(stdout);
        if (!r.passed) ++failed;
    });
    std::printf("%d of %d criteria passed\n", experiments::kCriterionCount - failed, experiments::kCriterionCount);
    return failed == 0 ? 0 : 1;
}
