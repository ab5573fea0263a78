// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each battery prints its trial tally so failures are replayable
// via `dwshell proptest <suite> --trials N --seed 20260823`.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "dwshell/harness.hpp"
#include "dwshell/linalg.hpp"
#include "dwshell/orthogonality.hpp"
#include "dwshell/ranges.hpp"

using namespace dwshell;

namespace {

constexpr uint64_t kSeed = 20260823;
int g_failures = 0;

void report(int idx, const char* label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", idx, label,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

void report_suite(int idx, const char* label, const SuiteResult& r) {
    std::string detail = std::to_string(r.passed) + "/" + std::to_string(r.total);
    if (!r.ok() && !r.failures.empty()) detail += "; first: " + r.failures.front();
    report(idx, label, r.ok(), detail);
}

void criterion_example() {
    const auto t0 = std::chrono::steady_clock::now();
    const CMatrix A = example_matrix();
    const auto [np, nm] = norm_pm(A, CMatrix::identity(4), 1.0);
    const double nr_defect = nr_symmetry_defect(A, 720);
    const OrthVerdict v = roberts_to_identity(A, batch_config());
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const bool ok = std::abs(np - 2.6918) <= 5e-4 && std::abs(nm - 2.7578) <= 5e-4 &&
                    nr_defect <= 1e-6 && v.kind == VerdictKind::NotRoberts && elapsed < 1.0;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "||A+I|| %.4f, ||A-I|| %.4f, nr defect %.1e, verdict %s, %.2fs", np, nm,
                  nr_defect, verdict_kind_name(v.kind), elapsed);
    report(1, "example reproduction", ok, detail);
}

}  // namespace

int main() {
    criterion_example();
    report_suite(2, "2x2 trace path vs shell sweep", run_twobytwo(500, kSeed));
    report_suite(3, "normal spectrum-symmetry ground truth", run_normal(200, kSeed));
    report_suite(4, "self-adjoint criterion and recentring", run_selfadjoint(200, kSeed));
    report_suite(5, "orthogonal-pair implication chain", run_chain(200, kSeed));
    report_suite(6, "shell sweep vs brute-force oracle", run_oracle(100, kSeed));
    report_suite(7, "2x2 elliptical range", run_ellipse(100, kSeed));
    report_suite(8, "2x2 shell vertical axis", run_dwaxis(100, kSeed));
    report_suite(9, "verdict invariance battery", run_invariance(100, kSeed));
    report_suite(10, "fiber-maximum evenness", run_evenness(20, kSeed));

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
