#include "embfp/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace embfp {

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double beta_cf(double a, double b, double x) {
    const double eps = 1e-15, tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) return h;
    }
    throw std::runtime_error("incomplete beta did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta parameters must be positive");
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("beta argument must be in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double front =
        std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                 b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_p_two_tailed(double t, int df) {
    if (df < 1) throw std::invalid_argument("degrees of freedom must be >= 1");
    if (!std::isfinite(t)) return 0.0;
    const double nu = static_cast<double>(df);
    return incomplete_beta(nu / 2.0, 0.5, nu / (nu + t * t));
}

TTestResult t_test(double s, const std::vector<double>& reference_scores) {
    const std::size_t M = reference_scores.size();
    if (M < 2) throw std::invalid_argument("t test needs at least 2 reference scores");

    TTestResult r;
    double sum = 0.0;
    for (double v : reference_scores) sum += v;
    r.mu = sum / static_cast<double>(M);
    double ss = 0.0;
    for (double v : reference_scores) ss += (v - r.mu) * (v - r.mu);
    r.sigma = std::sqrt(ss / static_cast<double>(M - 1));
    if (r.sigma == 0.0)
        throw std::domain_error("degenerate references: zero score spread");
    r.t = (r.mu - s) / (r.sigma / std::sqrt(static_cast<double>(M)));
    r.p = student_t_p_two_tailed(r.t, static_cast<int>(M) - 1);
    return r;
}

}  // namespace embfp
