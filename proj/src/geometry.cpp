#include "embfp/geometry.hpp"

#include <cmath>

#include "embfp/rng.hpp"

namespace embfp {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void check_cloud(const Cloud& c) {
    require(c.rows() >= 1, "cloud needs at least one point");
    require(c.cols() >= 2, "cloud dimension must be at least 2");
    require(c.allFinite(), "cloud contains non-finite values");
}

void check_same_shape(const Cloud& a, const Cloud& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(),
            "clouds must share point count and dimension");
}

double max_unit_norm_deviation(const Cloud& c) {
    return (c.rowwise().norm().array() - 1.0).abs().maxCoeff();
}

void check_rotation_matrix(const Matrix& R, double tol) {
    require(R.rows() == R.cols(), "rotation matrix must be square");
    const Eigen::Index n = R.rows();
    double ortho = (R.transpose() * R - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    require(ortho <= tol, "matrix is not orthogonal");
    require(std::abs(R.determinant() - 1.0) <= tol, "matrix is not a proper rotation");
}

void check_order(const std::string& order) {
    require(order.size() == 3, "order must be a permutation of R, S, T");
    bool r = false, s = false, t = false;
    for (char c : order) {
        if (c == 'R') r = true;
        else if (c == 'S') s = true;
        else if (c == 'T') t = true;
        else require(false, "order must be a permutation of R, S, T");
    }
    require(r && s && t, "order must be a permutation of R, S, T");
}

Cloud rotate(const Cloud& cloud, const Matrix& R) {
    check_cloud(cloud);
    require(R.rows() == cloud.cols() && R.cols() == cloud.cols(),
            "rotation dimension does not match cloud");
    return cloud * R.transpose();
}

Cloud scale(const Cloud& cloud, double alpha) {
    check_cloud(cloud);
    require(std::isfinite(alpha) && alpha > 0.0, "scale must be positive and finite");
    return cloud * alpha;
}

Cloud translate(const Cloud& cloud, const Vector& d) {
    check_cloud(cloud);
    require(d.size() == cloud.cols(), "translation dimension does not match cloud");
    require(d.allFinite(), "translation contains non-finite values");
    return cloud.rowwise() + d.transpose();
}

Cloud apply_rst(const Cloud& cloud, const RstParams& params) {
    check_order(params.order);
    Cloud out = cloud;
    for (char step : params.order) {
        switch (step) {
            case 'R': out = rotate(out, params.rotation); break;
            case 'S': out = scale(out, params.scale); break;
            case 'T': out = translate(out, params.translation); break;
        }
    }
    return out;
}

Matrix rotation_in_plane(const Vector& u, const Vector& v, double theta_deg) {
    require(u.size() == v.size() && u.size() >= 2, "plane vectors must match, dimension >= 2");
    require(std::abs(u.norm() - 1.0) <= 1e-9 && std::abs(v.norm() - 1.0) <= 1e-9 &&
                std::abs(u.dot(v)) <= 1e-9,
            "plane vectors must be orthonormal");
    const double th = theta_deg * kPi / 180.0;
    const double c = std::cos(th), s = std::sin(th);
    const Eigen::Index n = u.size();
    Matrix R = Matrix::Identity(n, n);
    R += (c - 1.0) * (u * u.transpose() + v * v.transpose());
    // positive angles turn u toward v
    R += s * (v * u.transpose() - u * v.transpose());
    return R;
}

Matrix random_rotation_in_plane(Eigen::Index n, double theta_deg, std::uint64_t seed) {
    require(n >= 2, "rotations need dimension >= 2");
    require(theta_deg >= -180.0 && theta_deg <= 180.0, "angle must be in [-180, 180]");
    Rng rng(seed);
    Vector u = rng.normal_vector(n);
    u.normalize();
    Vector v(n);
    // rejection: keep v's component orthogonal to u from degenerating
    do {
        v = rng.normal_vector(n);
        v -= u.dot(v) * u;
    } while (v.norm() < 1e-9);
    v.normalize();
    return rotation_in_plane(u, v, theta_deg);
}

Matrix random_rotation(Eigen::Index n, std::uint64_t seed) {
    require(n >= 2, "rotations need dimension >= 2");
    Rng rng(seed);
    Matrix G(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) G(i, j) = rng.normal();
    Eigen::HouseholderQR<Matrix> qr(G);
    Matrix Q = qr.householderQ();
    Matrix Rfac = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i)
        if (Rfac(i, i) < 0.0) Q.col(i) = -Q.col(i);
    if (Q.determinant() < 0.0) Q.col(n - 1) = -Q.col(n - 1);
    return Q;
}

Vector random_unit_direction(Eigen::Index n, std::uint64_t seed) {
    require(n >= 1, "direction needs dimension >= 1");
    Rng rng(seed);
    Vector v(n);
    do {
        for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.normal();
    } while (v.norm() < 1e-12);
    return v / v.norm();
}

}  // namespace embfp
