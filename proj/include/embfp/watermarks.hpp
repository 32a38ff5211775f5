#pragma once

#include <cstdint>
#include <vector>

#include "embfp/geometry.hpp"
#include "embfp/types.hpp"

namespace embfp {

// The three watermark decision rules analyzed here, reduced to the math that
// a geometric transform of the embedding space can reach.

// 1) Target-mixing watermark: trigger embeddings are pulled toward a secret
// target vector; detection compares mean cosine-to-target between trigger and
// normal embeddings.
struct TargetMixScheme {
    Vector target;        // unit vector
    double mix_weight;    // in [0, 1]
};

Vector targetmix_insert(const Vector& e_o, const TargetMixScheme& scheme);

// mean cos(row, target) over S1 minus the same over S0
double distribution_distance(const Cloud& S0, const Cloud& S1, const Vector& target);

// Cosine-to-target shift caused by a rotation: target . (R e - e) / (|e||target|)
double rotation_delta(const Vector& e, const Matrix& R, const Vector& target);

// 2) Linear decoder watermark: bit i = round(sigmoid(w_i . e)), ties round up.
struct LinearDecoderScheme {
    std::vector<Vector> weights;
};

std::vector<int> linear_decode(const LinearDecoderScheme& scheme, const Vector& e_m);

// Per-bit disagreement rate between decode(e) and decode(R e) over random
// full-dimensional rotations.
double rotation_bit_flip_rate(const LinearDecoderScheme& scheme, const Vector& e_m,
                              int trials, std::uint64_t seed);

// 3) Matrix-key watermark: publish e_m = T e_o, recover with the left inverse.
struct MatrixKeyScheme {
    Matrix T;
    Matrix T_pinv;  // T_pinv * T = I
};

// Square key with singular values in [0.5, 2] so the left inverse is well
// conditioned.
MatrixKeyScheme make_matrix_key(Eigen::Index n, std::uint64_t seed);

// || e_o - T_pinv * transform(T e_o) ||
double matrixkey_residual(const MatrixKeyScheme& scheme, const Vector& e_o,
                          const RstParams& attack);

}  // namespace embfp
