#include "doctest.h"

#include "soblab/errors.hpp"
#include "soblab/gamma_fn.hpp"

#include <cmath>

using namespace soblab;

TEST_CASE("gamma against exact values") {
    const double sqrt_pi = std::sqrt(3.14159265358979323846);
    CHECK(gamma_fn(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-13));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * sqrt_pi).epsilon(1e-13));
    CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(10.0) == doctest::Approx(362880.0).epsilon(1e-13));
}

TEST_CASE("gamma against the standard library on (0,60]") {
    // std::tgamma is the independent route; 1e-12 relative everywhere.
    for (int i = 1; i <= 6000; ++i) {
        double x = i * 0.01;
        double mine = gamma_fn(x);
        double ref = std::tgamma(x);
        CHECK(std::fabs(mine - ref) <= 1e-12 * std::fabs(ref));
    }
}

TEST_CASE("gamma functional equation") {
    for (double x : {0.001, 0.1, 0.37, 0.5, 0.9, 1.3, 7.7, 23.4}) {
        CHECK(gamma_fn(x + 1.0) == doctest::Approx(x * gamma_fn(x)).epsilon(1e-12));
    }
}

TEST_CASE("normalizing constant exact spot values") {
    const double pi = 3.14159265358979323846;
    // c_{1,1/2,2} = 1/(2 pi), c_{2,1/2,2} = 1/(4 pi); worked out from the
    // Gamma factors by hand.
    CHECK(normalizing_constant(1, 0.5, 2.0) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-12));
    CHECK(normalizing_constant(2, 0.5, 2.0) == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-12));

    // s -> 1: Gamma(1-s) blows up, the constant dies.
    CHECK(normalizing_constant(1, 0.999, 2.0) < 0.01);
    // s -> 0: proportional to s.
    double c1 = normalizing_constant(1, 1e-3, 2.0);
    double c2 = normalizing_constant(1, 2e-3, 2.0);
    CHECK(c2 / c1 == doctest::Approx(2.0).epsilon(1e-2));

    CHECK_THROWS_AS(normalizing_constant(1, 0.0, 2.0), Error);
    CHECK_THROWS_AS(normalizing_constant(1, 1.0, 2.0), Error);
}
