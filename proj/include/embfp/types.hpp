#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace embfp {

// One embedding per row; row i of two clouds always refers to the same input.
using Cloud = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

void check_cloud(const Cloud& c);                      // finite, N>=1, n>=2
void check_same_shape(const Cloud& a, const Cloud& b);

// max |row norm - 1| over the cloud
double max_unit_norm_deviation(const Cloud& c);

}  // namespace embfp
