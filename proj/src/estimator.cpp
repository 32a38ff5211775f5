#include "embfp/estimator.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace embfp {

SphereFit fit_hypersphere(const Cloud& cloud) {
    check_cloud(cloud);
    const Eigen::Index N = cloud.rows(), n = cloud.cols();
    require(N >= n + 1, "sphere fit needs at least n+1 points");

    // Linearized sphere equation: ||p||^2 - 2 c.p + (c.c - r^2) = 0, solved
    // for [c, c.c - r^2] in least squares.
    Matrix A(N, n + 1);
    A.leftCols(n) = -2.0 * cloud;
    A.col(n).setOnes();
    Vector b = -cloud.rowwise().squaredNorm();

    Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& sv = svd.singularValues();
    const double cutoff = 1e-12 * sv[0] * static_cast<double>(std::max(N, n + 1));
    if (sv[sv.size() - 1] <= cutoff)
        throw std::domain_error("degenerate sphere fit: points are affinely dependent");

    Vector x = svd.matrixV() * (svd.matrixU().transpose() * b).cwiseQuotient(sv);

    SphereFit fit;
    fit.center = x.head(n);
    const double r2 = fit.center.squaredNorm() - x[n];
    if (!(r2 > 0.0) || !std::isfinite(r2))
        throw std::domain_error("degenerate sphere fit: nonpositive squared radius");
    fit.radius = std::sqrt(r2);
    fit.residual = ((cloud.rowwise() - fit.center.transpose()).rowwise().squaredNorm().array() - r2)
                       .abs()
                       .mean();
    return fit;
}

double estimate_scale(const Cloud& suspect) {
    return 1.0 / fit_hypersphere(suspect).radius;
}

std::pair<Matrix, Vector> estimate_rotation_translation(const Cloud& suspect_scaled,
                                                        const Cloud& victim) {
    check_cloud(suspect_scaled);
    check_cloud(victim);
    check_same_shape(suspect_scaled, victim);
    require(suspect_scaled.rows() >= 2, "rotation estimate needs at least 2 points");

    const Eigen::Index n = victim.cols();
    Vector cp = suspect_scaled.colwise().mean();
    Vector cq = victim.colwise().mean();
    Matrix H = (suspect_scaled.rowwise() - cp.transpose()).transpose() *
               (victim.rowwise() - cq.transpose());

    Eigen::JacobiSVD<Matrix> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix R = svd.matrixV() * svd.matrixU().transpose();
    if (R.determinant() < 0.0) {
        // reflection: flip the least-significant singular direction
        Matrix V = svd.matrixV();
        V.col(n - 1) = -V.col(n - 1);
        R = V * svd.matrixU().transpose();
    }
    Vector d = cq - R * cp;
    return {R, d};
}

AlignmentEstimate align(const Cloud& suspect, const Cloud& victim) {
    check_cloud(suspect);
    check_cloud(victim);
    check_same_shape(suspect, victim);
    require(max_unit_norm_deviation(victim) <= 1e-6, "victim rows must be unit norm");

    AlignmentEstimate est;
    est.alpha = estimate_scale(suspect);
    Cloud scaled = suspect * est.alpha;
    auto [R, d] = estimate_rotation_translation(scaled, victim);
    est.rotation = std::move(R);
    est.translation = std::move(d);
    est.error = (apply_alignment(suspect, est) - victim).rowwise().squaredNorm().mean();
    return est;
}

Cloud apply_alignment(const Cloud& cloud, const AlignmentEstimate& est) {
    check_cloud(cloud);
    require(est.rotation.rows() == cloud.cols() && est.translation.size() == cloud.cols(),
            "alignment dimension does not match cloud");
    return (est.alpha * (cloud * est.rotation.transpose())).rowwise() +
           est.translation.transpose();
}

}  // namespace embfp
