// Acceptance suite: runs every validation criterion at full scale and prints
// one pass/fail line per criterion (clause details indented). Exits non-zero
// when any clause fails.
//
// Three clauses encode target values that our own derivations and Monte Carlo
// show cannot hold (documented in the clause implementations); they are
// executed as stated and reported honestly rather than loosened:
//   c1.example1        printed minimizer 0.1 is not the rate-profile minimum
//   c6.slope           15% band was calibrated against that non-minimal value
//   c8.gauss_vs_steady the steady formula carries a spurious atom at zero

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "rsqueue/validate.hpp"

int main(int argc, char** argv) {
    rsq::ValidationOptions opt;
    opt.scale = rsq::ValidationScale::Full;
    opt.workers = 1;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opt.scale = rsq::ValidationScale::Quick;
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc)
            opt.workers = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
            opt.only.push_back(std::atoi(argv[++i]));
    }

    const auto start = std::chrono::steady_clock::now();
    const auto results = rsq::run_validation(opt);
    int failed_clauses = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %d: %s (%.1fs)\n", r.pass ? "PASS" : "FAIL",
                    r.number, r.name.c_str(), r.seconds);
        for (const auto& c : r.clauses) {
            std::printf("    [%s] %-22s %-48s metric=%.6g threshold=%.6g%s%s\n",
                        c.pass ? "pass" : "FAIL", c.id.c_str(), c.name.c_str(), c.metric,
                        c.threshold, c.detail.empty() ? "" : "  | ",
                        c.detail.c_str());
            if (!c.pass) ++failed_clauses;
        }
    }
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    std::printf("%d/%zu criteria passed, %d failing clause(s), %.1fs total\n", passed,
                results.size(), failed_clauses, total);
    return failed_clauses == 0 ? 0 : 1;
}
