#include "embfp/watermarks.hpp"

#include <cmath>

#include "embfp/rng.hpp"

namespace embfp {

Vector targetmix_insert(const Vector& e_o, const TargetMixScheme& scheme) {
    require(e_o.size() == scheme.target.size(), "vector dimensions must match");
    require(std::abs(e_o.norm() - 1.0) <= 1e-6, "input embedding must be unit norm");
    require(std::abs(scheme.target.norm() - 1.0) <= 1e-9, "target must be unit norm");
    require(scheme.mix_weight >= 0.0 && scheme.mix_weight <= 1.0,
            "mix weight must be in [0, 1]");
    Vector v = (1.0 - scheme.mix_weight) * e_o + scheme.mix_weight * scheme.target;
    const double norm = v.norm();
    if (norm < 1e-12)
        throw std::domain_error("mix cancels to zero (opposite vectors at weight 0.5)");
    return v / norm;
}

double distribution_distance(const Cloud& S0, const Cloud& S1, const Vector& target) {
    check_cloud(S0);
    check_cloud(S1);
    require(S0.cols() == S1.cols() && target.size() == S0.cols(),
            "dimensions must match");
    const double tn = target.norm();
    require(tn > 0.0, "target must be nonzero");

    auto mean_cos = [&](const Cloud& S) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < S.rows(); ++i) {
            const double rn = S.row(i).norm();
            if (rn == 0.0) throw std::domain_error("zero-norm embedding row");
            acc += S.row(i).dot(target) / (rn * tn);
        }
        return acc / static_cast<double>(S.rows());
    };
    return mean_cos(S1) - mean_cos(S0);
}

double rotation_delta(const Vector& e, const Matrix& R, const Vector& target) {
    require(e.size() == target.size() && R.rows() == e.size() && R.cols() == e.size(),
            "dimensions must match");
    const double en = e.norm(), tn = target.norm();
    if (en == 0.0 || tn == 0.0) throw std::domain_error("zero-norm vector");
    return target.dot(R * e - e) / (en * tn);
}

std::vector<int> linear_decode(const LinearDecoderScheme& scheme, const Vector& e_m) {
    require(!scheme.weights.empty(), "decoder needs at least one weight vector");
    std::vector<int> bits;
    bits.reserve(scheme.weights.size());
    for (const Vector& w : scheme.weights) {
        require(w.size() == e_m.size(), "weight dimension does not match embedding");
        // sigmoid(w.e) rounds to 1 exactly when w.e >= 0 (ties round up)
        bits.push_back(w.dot(e_m) >= 0.0 ? 1 : 0);
    }
    return bits;
}

double rotation_bit_flip_rate(const LinearDecoderScheme& scheme, const Vector& e_m,
                              int trials, std::uint64_t seed) {
    require(trials >= 1000, "flip-rate estimate needs at least 1000 trials");
    const std::vector<int> base = linear_decode(scheme, e_m);
    const Eigen::Index n = e_m.size();
    long flips = 0;
    for (int t = 0; t < trials; ++t) {
        Matrix R = random_rotation(n, derive_seed(seed, static_cast<std::uint64_t>(t)));
        const std::vector<int> rotated = linear_decode(scheme, R * e_m);
        for (std::size_t i = 0; i < base.size(); ++i)
            if (rotated[i] != base[i]) ++flips;
    }
    return static_cast<double>(flips) /
           (static_cast<double>(trials) * static_cast<double>(base.size()));
}

MatrixKeyScheme make_matrix_key(Eigen::Index n, std::uint64_t seed) {
    require(n >= 2, "key needs dimension >= 2");
    Matrix U = random_rotation(n, derive_seed(seed, 1));
    Matrix V = random_rotation(n, derive_seed(seed, 2));
    Rng rng(derive_seed(seed, 3));
    Vector sv(n);
    for (Eigen::Index i = 0; i < n; ++i) sv[i] = rng.uniform(0.5, 2.0);
    MatrixKeyScheme scheme;
    scheme.T = U * sv.asDiagonal() * V.transpose();
    scheme.T_pinv = V * sv.cwiseInverse().asDiagonal() * U.transpose();
    return scheme;
}

double matrixkey_residual(const MatrixKeyScheme& scheme, const Vector& e_o,
                          const RstParams& attack) {
    require(scheme.T.cols() == e_o.size(), "key column count must match embedding");
    require(scheme.T_pinv.rows() == e_o.size() && scheme.T_pinv.cols() == scheme.T.rows(),
            "left inverse has wrong shape");
    Vector e_m = scheme.T * e_o;
    Cloud row(1, e_m.size());
    row.row(0) = e_m.transpose();
    Cloud attacked = apply_rst(row, attack);
    Vector decoded = scheme.T_pinv * attacked.row(0).transpose();
    return (e_o - decoded).norm();
}

}  // namespace embfp
