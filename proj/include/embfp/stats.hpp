#pragma once

#include <vector>

namespace embfp {

struct TTestResult {
    double mu = 0.0;     // mean of the reference scores
    double sigma = 0.0;  // sample std (M-1 divisor)
    double t = 0.0;      // (mu - s) / (sigma / sqrt(M))
    double p = 0.0;      // two-tailed, Student-t with df = M-1
};

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation,
// relative error ~1e-14.
double incomplete_beta(double a, double b, double x);

// Two-tailed p for a t statistic at the given degrees of freedom.
double student_t_p_two_tailed(double t, int df);

// One-sample t test of `s` against the reference scores (needs >= 2 of them,
// with nonzero spread).
TTestResult t_test(double s, const std::vector<double>& reference_scores);

}  // namespace embfp
