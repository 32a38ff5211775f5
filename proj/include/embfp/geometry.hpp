#pragma once

#include <cstdint>
#include <string>

#include "embfp/types.hpp"

namespace embfp {

// Rotation + uniform scale + translation, applied in the order given by
// `order` ("RST", "TSR", ... any permutation of R, S, T).
struct RstParams {
    Matrix rotation;      // n x n, orthogonal, det +1
    double scale = 1.0;   // > 0
    Vector translation;   // n
    std::string order = "RST";
};

void check_rotation_matrix(const Matrix& R, double tol = 1e-9);
void check_order(const std::string& order);

Cloud rotate(const Cloud& cloud, const Matrix& R);
Cloud scale(const Cloud& cloud, double alpha);
Cloud translate(const Cloud& cloud, const Vector& d);
Cloud apply_rst(const Cloud& cloud, const RstParams& params);

// Rotation by `theta_deg` inside the plane spanned by the orthonormal pair
// (u, v); identity on the orthogonal complement.
Matrix rotation_in_plane(const Vector& u, const Vector& v, double theta_deg);

// Same, with the plane drawn from `seed`.
Matrix random_rotation_in_plane(Eigen::Index n, double theta_deg, std::uint64_t seed);

// Uniformly distributed member of SO(n) (QR of a Gaussian matrix, sign-fixed).
Matrix random_rotation(Eigen::Index n, std::uint64_t seed);

Vector random_unit_direction(Eigen::Index n, std::uint64_t seed);

}  // namespace embfp
