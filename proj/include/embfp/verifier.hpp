#pragma once

#include <optional>
#include <vector>

#include "embfp/estimator.hpp"
#include "embfp/stats.hpp"
#include "embfp/types.hpp"

namespace embfp {

struct VerifyResult {
    double s = 0.0;                      // suspect-vs-victim score
    std::vector<double> reference_scores;
    TTestResult ttest;
    double threshold = 1e-3;
    bool stolen = false;                 // p <= threshold
    std::optional<AlignmentEstimate> alignment;  // absent for the direct protocol
};

// Mean squared row distance between two same-shape clouds.
double similarity_score(const Cloud& a, const Cloud& b);

// Align the suspect onto the victim, score it against the victim and, through
// the same fitted map, against each reference; then t-test the victim score
// against the reference scores. Small p = the suspect sits closer to the
// victim than clean models do = extraction verdict.
VerifyResult verify(const Cloud& suspect, const Cloud& victim,
                    const std::vector<Cloud>& references, double threshold = 1e-3);

// Same scoring and test without fitting any map: the protocol for suspects
// that are known not to be transformed, and for innocence checks, where
// fitting a map to the suspect itself would bias the comparison.
VerifyResult verify_direct(const Cloud& suspect, const Cloud& victim,
                           const std::vector<Cloud>& references, double threshold = 1e-3);

}  // namespace embfp
