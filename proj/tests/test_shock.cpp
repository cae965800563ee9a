#include "colombeau/error.hpp"
#include "colombeau/shock.hpp"

#include <doctest.h>

#include <cmath>

using namespace colombeau;

namespace {

// Roots of c^2 + c/2 - 1 = 0 and c^2 + 2c/3 - 1 = 0 (sympy, 16 digits).
constexpr double kCPlus = 0.7807764064044151;
constexpr double kCMinus = -1.2807764064044151;
constexpr double kCTwoThirds = 0.7207592200561265;

const State kLeft{1.0, 0.0, 0.0};

}  // namespace

TEST_SUITE("shock")
{
    TEST_CASE("mixed roots and right states")
    {
        const auto sols = solve_shock_mixed(kLeft, -1.0);
        REQUIRE(sols.size() == 2);
        CHECK(sols[0].c == doctest::Approx(kCPlus).epsilon(1e-14));
        CHECK(sols[1].c == doctest::Approx(kCMinus).epsilon(1e-14));
        CHECK(sols[0].m == doctest::Approx(-kCPlus).epsilon(1e-14));
        CHECK(sols[0].right.rho == doctest::Approx(0.438447187191170).epsilon(1e-13));
        CHECK(sols[0].right.tau == doctest::Approx(kCPlus).epsilon(1e-13));
        CHECK(sols[0].formulation == Formulation::Mixed);
    }

    TEST_CASE("Rankine-Hugoniot relations of eq1 and eq2")
    {
        for (double u_r : {-1.0, -0.2, 0.5, 3.0}) {
            for (const auto& s : solve_shock_mixed(State{2.0, 0.3, -0.4}, u_r)) {
                const auto& l = s.left;
                const auto& r = s.right;
                CHECK(std::abs(s.c * (r.rho - l.rho) - (r.rho * r.u - l.rho * l.u)) < 1e-10);
                CHECK(std::abs(s.c * (r.rho * r.u - l.rho * l.u) - (r.rho * r.u * r.u - l.rho * l.u * l.u) +
                               (r.tau - l.tau)) < 1e-10);
                CHECK((l.u - s.c) * (r.u - s.c) > 0.0);
            }
        }
    }

    TEST_CASE("all-weak speeds depend on A")
    {
        CHECK(solve_shock(kLeft, -1.0, 0.5, Formulation::AllWeak)[0].c == doctest::Approx(kCPlus).epsilon(1e-14));
        CHECK(solve_shock(kLeft, -1.0, 2.0 / 3.0, Formulation::AllWeak)[0].c ==
              doctest::Approx(kCTwoThirds).epsilon(1e-14));
    }

    TEST_CASE("preconditions")
    {
        CHECK_THROWS_AS(solve_shock_mixed(kLeft, 0.0), InvalidArgument);
        CHECK_THROWS_AS(solve_shock(kLeft, -1.0, 1.0, Formulation::AllWeak), InvalidArgument);
        CHECK_THROWS_AS(solve_shock(kLeft, -1.0, 0.0, Formulation::AllWeak), InvalidArgument);
        CHECK_THROWS_AS((State{-1.0, 0.0, 0.0}.validate()), InvalidArgument);
        const auto s = solve_shock_mixed(kLeft, -1.0)[0];
        CHECK_THROWS_AS(build_travelling_wave(kLeft, s.right, -0.5, find_profile("bump")), CertificateViolation);
        State wrong = s.right;
        wrong.tau += 0.1;
        CHECK_THROWS_AS(build_travelling_wave(kLeft, wrong, s.c, find_profile("bump")), InvalidArgument);
    }

    TEST_CASE("travelling wave has the end states and vanishing strong residuals")
    {
        const auto s = solve_shock_mixed(kLeft, -1.0)[0];
        for (const auto& p : builtin_profiles()) {
            const auto w = build_travelling_wave(s, p, p);
            CHECK(evaluate(w.rho, -1.0, 0.01) == doctest::Approx(1.0));
            CHECK(evaluate(w.rho, 1.0, 0.01) == doctest::Approx(s.right.rho));
            CHECK(evaluate(w.tau, 1.0, 0.01) == doctest::Approx(s.right.tau));
            for (double xi : {-0.005, 0.0, 0.003}) {
                CHECK(std::abs(evaluate(residual(w, 1), xi, 0.01)) < 1e-12);
                CHECK(std::abs(evaluate(residual(w, 2), xi, 0.01)) < 1e-12);
            }
        }
    }

    TEST_CASE("product constants of kernel powers")
    {
        const auto K = find_profile("bump");
        CHECK(product_constant(K, K)(0.01) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(product_constant(find_profile("bump^2"), K)(0.01) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(product_constant(K, find_profile("bump^2"))(0.01) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        const auto r = realize_product_constant(2.0 / 3.0, K);
        CHECK(r.p == 1);
        CHECK(r.q == 2);
        const auto q = solve_shock_quadrature(kLeft, -1.0, K, find_profile("bump^2"));
        CHECK(q[0].c == doctest::Approx(kCTwoThirds).epsilon(1e-10));
    }

    TEST_CASE("validation of both mixed roots")
    {
        ValidationConfig cfg;
        for (const auto& s : solve_shock_mixed(kLeft, -1.0)) {
            const auto v = validate_solution(s, find_profile("bump-skewed"), find_profile("bump-skewed"), cfg);
            CHECK(v.strong_eq12);
            CHECK(v.validated);
            REQUIRE(v.residuals.size() == 3);
            CHECK(v.residuals[0].max_abs < 1e-12);
            CHECK(v.residuals[1].max_abs < 1e-12);
            CHECK_FALSE(v.residuals[2].null.null);
        }
    }

    TEST_CASE("nonuniqueness entries validate with realized kernels")
    {
        const auto entries = demo_nonuniqueness(kLeft, -1.0, {0.5, 2.0 / 3.0});
        REQUIRE(entries.size() == 2);
        CHECK(entries[1].realization.q == 2);
        CHECK(entries[0].solutions[0].solution.c == doctest::Approx(kCPlus).epsilon(1e-14));
        CHECK(entries[1].solutions[0].solution.c == doctest::Approx(kCTwoThirds).epsilon(1e-14));
        for (const auto& e : entries)
            for (const auto& v : e.solutions)
                CHECK(v.validated);
    }

    TEST_CASE("no strong solution evidence")
    {
        const auto r = demo_no_strong_solution(kLeft, -1.0);
        CHECK_FALSE(r.trivial);
        CHECK(r.entries.size() == 6);
        CHECK(r.statement.find("evidence") != std::string::npos);
        for (const auto& e : r.entries) {
            CHECK(e.eq3_sup.slope <= -0.9);
            CHECK_FALSE(e.eq3_null);
            CHECK(e.eq3_associated == Verdict::True);
        }
        const auto t = demo_no_strong_solution(kLeft, 0.0);
        CHECK(t.trivial);
        CHECK(t.entries.empty());
    }
}
