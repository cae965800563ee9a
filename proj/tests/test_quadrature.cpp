#include "colombeau/error.hpp"
#include "colombeau/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace colombeau;

TEST_SUITE("quadrature")
{
    TEST_CASE("polynomials and trigonometric integrals")
    {
        CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
              doctest::Approx(2.0).epsilon(1e-14));
        CHECK(integrate([](double x) { return std::exp(x); }, -1.0, 2.0).value ==
              doctest::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-14));
    }

    TEST_CASE("magnitude is the integral of |f|")
    {
        const auto r = integrate([](double x) { return std::sin(x); }, 0.0, 2 * std::numbers::pi);
        CHECK(std::abs(r.value) < 1e-14);
        CHECK(r.magnitude == doctest::Approx(4.0).epsilon(0.02));
    }

    TEST_CASE("breakpoints resolve a kink")
    {
        const std::vector<double> bp{-1.0, 0.3, 1.0};
        const auto r = integrate_panels([](double x) { return std::abs(x - 0.3); }, bp);
        CHECK(r.value == doctest::Approx(0.5 * (1.3 * 1.3 + 0.7 * 0.7)).epsilon(1e-15));
    }

    TEST_CASE("sharp peak converges through subdivision")
    {
        const double s = 1e-3;
        const auto r = integrate([s](double x) { return std::exp(-x * x / (2 * s * s)); }, -1.0, 1.0);
        CHECK(r.value == doctest::Approx(s * std::sqrt(2 * std::numbers::pi)).epsilon(1e-10));
        CHECK(r.subdivisions > 1);
    }

    TEST_CASE("budget exhaustion raises with the achieved estimate")
    {
        QuadratureConfig cfg;
        cfg.max_subdivisions = 1;
        cfg.abs_tol = 1e-15;
        cfg.rel_tol = 1e-15;
        try {
            integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, cfg);
            FAIL("expected QuadratureError");
        } catch (const QuadratureError& e) {
            CHECK(e.error_estimate() > 0.0);
            CHECK(std::isfinite(e.value()));
        }
    }

    TEST_CASE("config validation")
    {
        QuadratureConfig cfg;
        cfg.abs_tol = -1.0;
        CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
        cfg = {};
        cfg.max_subdivisions = 0;
        CHECK_THROWS_AS(cfg.validate(), InvalidArgument);
        CHECK(integrate([](double) { return 1.0; }, 1.0, 0.0).value == -1.0);
        const std::vector<double> unsorted{0.0, 1.0, 0.5};
        CHECK_THROWS_AS(integrate_panels([](double) { return 1.0; }, unsorted), InvalidArgument);
    }
}
