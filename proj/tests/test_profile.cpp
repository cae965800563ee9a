#include "colombeau/error.hpp"
#include "colombeau/profile.hpp"

#include <doctest.h>

#include <cmath>

using namespace colombeau;

namespace {

// mpmath, 25 digits: Z = int_{-1}^{1} exp(-1/(1-t^2)) dt and K_bump at a few points.
constexpr double kZ = 0.443993816168079437823;
constexpr double kBumpAtHalf = 0.877032716722670921914;
constexpr double kBumpAtMinus03 = 0.259092025356192013004;
constexpr double kBumpDerivAt02 = 0.794754495691595423451;
constexpr double kSkewedAtZero = 0.416386500572506167515;

}  // namespace

TEST_SUITE("profile")
{
    TEST_CASE("builtin order and names")
    {
        const auto& ps = builtin_profiles();
        REQUIRE(ps.size() == 3);
        CHECK(ps[0]->name() == "bump");
        CHECK(ps[1]->name() == "bump-squared");
        CHECK(ps[2]->name() == "bump-skewed");
    }

    TEST_CASE("bump values against high-precision quadrature")
    {
        const auto K = find_profile("bump");
        CHECK(K->eval(0.0) == 0.5);
        CHECK(K->eval(0.5) == doctest::Approx(kBumpAtHalf).epsilon(1e-14));
        CHECK(K->eval(-0.3) == doctest::Approx(kBumpAtMinus03).epsilon(1e-14));
        CHECK(K->deriv(1, 0.2) == doctest::Approx(kBumpDerivAt02).epsilon(1e-14));
        const auto* b = dynamic_cast<const BumpIntegralProfile*>(K.get());
        REQUIRE(b != nullptr);
        CHECK(b->normalization() == doctest::Approx(kZ).epsilon(1e-14));
    }

    TEST_CASE("symmetry of the bump kernel")
    {
        const auto K = find_profile("bump");
        for (double y : {0.1, 0.37, 0.8, 0.99})
            CHECK(K->eval(y) + K->eval(-y) == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("skewed and squared kernels")
    {
        CHECK(find_profile("bump-skewed")->eval(0.0) == doctest::Approx(kSkewedAtZero).epsilon(1e-14));
        CHECK(find_profile("bump-squared")->eval(0.5) == doctest::Approx(kBumpAtHalf * kBumpAtHalf).epsilon(1e-14));
        const auto cube = find_profile("bump^3");
        CHECK(cube->eval(0.5) == doctest::Approx(std::pow(kBumpAtHalf, 3)).epsilon(1e-14));
        CHECK(find_profile("bump^1") == find_profile("bump"));
    }

    TEST_CASE("tails are exactly 0 and 1, derivatives vanish outside the support")
    {
        for (const auto& p : builtin_profiles()) {
            CAPTURE(p->name());
            CHECK(p->eval(-1.0) == 0.0);
            CHECK(p->eval(-7.5) == 0.0);
            CHECK(p->eval(1.0) == 1.0);
            CHECK(p->eval(3.0) == 1.0);
            for (int n = 1; n <= 3; ++n) {
                CHECK(p->deriv(n, -1.5) == 0.0);
                CHECK(p->deriv(n, 1.5) == 0.0);
            }
        }
    }

    TEST_CASE("monotone on a fine grid")
    {
        for (const auto& p : builtin_profiles()) {
            double prev = p->eval(-1.0);
            for (int i = 1; i <= 2000; ++i) {
                const double v = p->eval(-1.0 + i * 1e-3);
                REQUIRE(v >= prev);
                prev = v;
            }
        }
    }

    TEST_CASE("derivative matches central differences")
    {
        const double h = 1e-5;
        for (const auto& p : builtin_profiles()) {
            for (double y : {-0.6, -0.1, 0.0, 0.45, 0.9}) {
                const double fd = (p->eval(y + h) - p->eval(y - h)) / (2 * h);
                CHECK(p->deriv(1, y) == doctest::Approx(fd).epsilon(1e-8));
                const double fd2 = (p->deriv(1, y + h) - p->deriv(1, y - h)) / (2 * h);
                CHECK(p->deriv(2, y) == doctest::Approx(fd2).epsilon(1e-6).scale(1.0));
            }
        }
    }

    TEST_CASE("unknown profile names are rejected")
    {
        CHECK_THROWS_AS(find_profile("gauss"), InvalidArgument);
        CHECK_THROWS_AS(find_profile("bump^0"), InvalidArgument);
        CHECK_THROWS_AS(find_profile("bump^x"), InvalidArgument);
    }
}
