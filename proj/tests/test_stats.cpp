#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "embfp/stats.hpp"

using namespace embfp;

namespace {

// closed form for the two-tailed p at df=2
double p_df2(double t) {
    return 1.0 - std::abs(t) / std::sqrt(t * t + 2.0);
}

}  // namespace

TEST_CASE("t_test: frozen three-reference case") {
    TTestResult r = t_test(0.1, {0.9, 1.0, 1.1});
    CHECK(r.mu == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.sigma == doctest::Approx(0.1).epsilon(1e-12));
    // (1.0 - 0.1) / (0.1 / sqrt(3)) = 9 sqrt(3)
    CHECK(r.t == doctest::Approx(15.588457268119895).epsilon(1e-12));
    // 1 - sqrt(243/245)
    CHECK(r.p == doctest::Approx(0.004089996689521376).epsilon(1e-10));
}

TEST_CASE("t_test: suspect farther than the references flips the sign") {
    TTestResult r = t_test(2.0, {1.0, 1.0 + 1e-4, 1.0 - 1e-4});
    CHECK(r.t < -1e4);
    CHECK(r.p == doctest::Approx(p_df2(r.t)).epsilon(1e-10));
}

TEST_CASE("t_test: error cases") {
    CHECK_THROWS_AS(t_test(0.1, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(t_test(0.1, {1.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("t_test: p shrinks monotonically as the gap grows") {
    double last = 1.1;
    for (double s : {0.9, 0.7, 0.5, 0.2, 0.05}) {
        TTestResult r = t_test(s, {0.98, 1.0, 1.02});
        CHECK(r.p < last);
        last = r.p;
    }
}

TEST_CASE("student_t_p_two_tailed: matches the df=2 closed form") {
    for (double t : {0.0, 0.3, 1.0, 2.4, 11.08, 31.87, 178.62, -11.08, -500.0}) {
        CHECK(student_t_p_two_tailed(t, 2) ==
              doctest::Approx(p_df2(t)).epsilon(1e-10));
    }
}

TEST_CASE("student_t_p_two_tailed: known anchor values") {
    // df=1 is a Cauchy: p = 1 - (2/pi) atan|t|
    CHECK(student_t_p_two_tailed(1.0, 1) == doctest::Approx(0.5).epsilon(1e-12));
    // symmetric in t
    CHECK(student_t_p_two_tailed(3.4, 5) ==
          doctest::Approx(student_t_p_two_tailed(-3.4, 5)).epsilon(1e-14));
    // t = 0 is no evidence at all
    CHECK(student_t_p_two_tailed(0.0, 7) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("incomplete_beta: boundary and symmetry identities") {
    CHECK(incomplete_beta(2.5, 1.5, 0.0) == 0.0);
    CHECK(incomplete_beta(2.5, 1.5, 1.0) == 1.0);
    for (double x : {0.05, 0.3, 0.5, 0.77, 0.99}) {
        CHECK(incomplete_beta(2.0, 3.0, x) ==
              doctest::Approx(1.0 - incomplete_beta(3.0, 2.0, 1.0 - x)).epsilon(1e-12));
    }
    // I_x(1, b) = 1 - (1-x)^b
    CHECK(incomplete_beta(1.0, 4.0, 0.2) ==
          doctest::Approx(1.0 - std::pow(0.8, 4.0)).epsilon(1e-12));
    CHECK_THROWS_AS(incomplete_beta(0.0, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(incomplete_beta(1.0, 1.0, 1.5), std::invalid_argument);
}
