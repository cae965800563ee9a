#include "colombeau/error.hpp"
#include "colombeau/ladder.hpp"
#include "colombeau/pairing.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace colombeau;

namespace {

// mpmath: int_0^1 exp(1 - 1/(1 - x^2)) dx and int sin(x) phi(x - 0.3) dx.
constexpr double kHalfPhiMass = 0.603450161218938087668;
constexpr double kSinPair = 0.329242795194922977655;

}  // namespace

TEST_SUITE("pairing")
{
    TEST_CASE("dirac integrates to one on every profile and rung")
    {
        for (const auto& p : builtin_profiles()) {
            const auto d = dirac(p);
            for (double eps : EpsLadder{}.epsilons())
                CHECK(integrate_total(d, eps).value == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    TEST_CASE("pairings against independent quadrature")
    {
        TestFunction phi;
        CHECK(pair(heaviside("bump"), phi, 0.1).value == doctest::Approx(kHalfPhiMass).epsilon(1e-12));
        TestFunction shifted{0.3, 1.0, 1.0, 0};
        CHECK(pair(sin(variable_x()), shifted, 0.1).value == doctest::Approx(kSinPair).epsilon(1e-12));
        CHECK(pair(dirac("bump-skewed"), phi, 1e-4).value == doctest::Approx(1.0).epsilon(1e-6));
    }

    TEST_CASE("pairing is linear")
    {
        const auto H = heaviside("bump-skewed");
        const auto g1 = H * H;
        const auto g2 = dirac("bump");
        TestFunction phi{-0.3, 1.0, 1.0, 0};
        for (double eps : {0.1, 0.01}) {
            const double lhs = pair(2.0 * g1 - 3.0 * g2, phi, eps).value;
            const double rhs = 2.0 * pair(g1, phi, eps).value - 3.0 * pair(g2, phi, eps).value;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }

    TEST_CASE("integration by parts")
    {
        const auto g = ipow(heaviside("bump"), 2) * cos(variable_x());
        for (const auto& phi : default_battery()) {
            for (double eps : {0.05, 0.002}) {
                const double lhs = pair(differentiate(g), phi, eps).value;
                const double rhs = -pair(g, phi.derivative(), eps).value;
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
            }
        }
    }

    TEST_CASE("minus one sixth does not depend on eps")
    {
        const auto H = heaviside("bump-squared");
        const auto g = (H * H - H) * differentiate(H);
        for (double eps : {0.5, 0.1, 1e-3, 1e-6})
            CHECK(integrate_total(g, eps).value == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));
    }

    TEST_CASE("unbounded support is refused")
    {
        CHECK_THROWS_AS(integrate_total(sin(variable_x()), 0.1), UnboundedSupport);
        CHECK_THROWS_AS(integrate_total(heaviside("bump"), 0.1), UnboundedSupport);
    }

    TEST_CASE("test function validation and shape")
    {
        TestFunction phi{0.0, -1.0, 1.0, 0};
        CHECK_THROWS_AS(phi.validate(), InvalidArgument);
        TestFunction ok{0.5, 2.0, 3.0, 0};
        CHECK(ok(0.5) == 3.0);
        CHECK(ok(2.5) == 0.0);
        CHECK(default_battery().size() == 5);
    }

    TEST_CASE("ladder sampling and csv")
    {
        EpsLadder l{4, 9};
        CHECK(l.size() == 6);
        CHECK(l.epsilons().front() == 0.0625);
        CHECK_THROWS_AS((EpsLadder{4, 8}.validate()), InvalidArgument);
        const auto pts = sample_ladder(GenNumber::from_function([](double e) { return 2 * e; }, "2 eps"), l);
        REQUIRE(pts.size() == 6);
        CHECK(pts[5].value == 2.0 / 512.0);
        std::ostringstream os;
        write_ladder_csv(os, pts);
        CHECK(os.str().rfind("eps,value,error\n0.0625,0.125,0\n", 0) == 0);
    }
}
