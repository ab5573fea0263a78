#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwshell/gen.hpp"
#include "dwshell/orthogonality.hpp"

namespace dwshell {

/// Outcome of one property battery: per-trial pass counts plus replayable
/// failure descriptions (first failing trial index doubles as the seed echo).
struct SuiteResult {
    std::string name;
    int passed = 0;
    int total = 0;
    std::vector<std::string> failures;

    bool ok() const { return total > 0 && passed == total; }
};

/// The embedded 4x4 upper-triangular matrix with a circular numerical range
/// whose shifted norms differ (2.6918 vs 2.7578).
CMatrix example_matrix();

/// Decider configuration used by the batch batteries: coarser hemisphere
/// grid than the CLI default; verdicts are unaffected because the deciding
/// defects are either ~1e-13 or O(0.1).
DeciderConfig batch_config();

SuiteResult run_chain(int trials, uint64_t seed);        // a*b = 0 implication chain
SuiteResult run_twobytwo(int trials, uint64_t seed);     // trace path vs forced shell sweep
SuiteResult run_normal(int trials, uint64_t seed);       // spectrum symmetry ground truth
SuiteResult run_selfadjoint(int trials, uint64_t seed);  // spectral criterion + recentring
SuiteResult run_oracle(int trials, uint64_t seed);       // shell sweep vs brute-force lambda grid
SuiteResult run_ellipse(int trials, uint64_t seed);      // 2x2 boundary vs ellipse oracle
SuiteResult run_dwaxis(int trials, uint64_t seed);       // 2x2 shell vertical axis bound
SuiteResult run_invariance(int trials, uint64_t seed);   // verdict symmetries + necessary condition
SuiteResult run_evenness(int trials, uint64_t seed);     // fiber maximum g(mu) = g(-mu)

SuiteResult run_suite_by_name(const std::string& name, int trials, uint64_t seed);
std::vector<std::string> suite_names();

/// Distance from a point to the (possibly degenerate) ellipse curve.
double point_ellipse_distance(const EllipseParams& ep, cplx p);

}  // namespace dwshell
