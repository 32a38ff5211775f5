#pragma once

#include "embfp/types.hpp"

namespace embfp {

struct SphereFit {
    Vector center;
    double radius = 0.0;
    double residual = 0.0;  // mean | ||p - c||^2 - r^2 |
};

struct AlignmentEstimate {
    Matrix rotation;         // n x n proper rotation
    double alpha = 1.0;      // uniform scale
    Vector translation;      // n
    double error = 0.0;      // mean squared residual after mapping
};

// Least-squares hypersphere through the cloud. Needs N >= n+1 points in
// general position; throws std::domain_error when the system is rank
// deficient or the radius comes out imaginary.
SphereFit fit_hypersphere(const Cloud& cloud);

// 1 / fitted radius: the scale that puts the suspect back on the unit sphere.
double estimate_scale(const Cloud& suspect);

// Orthogonal Procrustes with det +1 enforced; also returns the translation
// between centroids. `suspect_scaled` must already be at victim scale.
std::pair<Matrix, Vector> estimate_rotation_translation(const Cloud& suspect_scaled,
                                                        const Cloud& victim);

// Full similarity-transform estimate mapping suspect onto victim
// (scale, then rotation, then translation). Victim rows must be unit norm.
AlignmentEstimate align(const Cloud& suspect, const Cloud& victim);

// row -> alpha * R * row + translation
Cloud apply_alignment(const Cloud& cloud, const AlignmentEstimate& est);

}  // namespace embfp
