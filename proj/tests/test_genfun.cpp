#include "colombeau/error.hpp"
#include "colombeau/genfun.hpp"
#include "colombeau/serialize.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace colombeau;

namespace {

constexpr double kBumpAtHalf = 0.877032716722670921914;
constexpr double kBumpDerivAt02 = 0.794754495691595423451;

std::vector<GenFunction> samples()
{
    const auto H = heaviside("bump");
    const auto Hs = heaviside("bump-skewed");
    const auto x = variable_x();
    return {H, Hs * H, sin(x) * H, exp(x * 0.3) + Hs, ipow(H, 3) - 2.0 * dirac("bump"), cos(H * x)};
}

}  // namespace

TEST_SUITE("genfun")
{
    TEST_CASE("heaviside and dirac evaluate the kernel at x / eps")
    {
        const auto H = heaviside("bump");
        CHECK(evaluate(H, 0.05, 0.1) == doctest::Approx(kBumpAtHalf).epsilon(1e-14));
        CHECK(evaluate(dirac("bump"), 0.02, 0.1) == doctest::Approx(kBumpDerivAt02 / 0.1).epsilon(1e-14));
        CHECK(evaluate(H, -0.5, 0.1) == 0.0);
        CHECK(evaluate(H, 0.5, 0.1) == 1.0);
    }

    TEST_CASE("eps must lie in (0, 1)")
    {
        const auto H = heaviside("bump");
        CHECK_THROWS_AS(evaluate(H, 0.0, 0.0), InvalidArgument);
        CHECK_THROWS_AS(evaluate(H, 0.0, 1.0), InvalidArgument);
        CHECK_THROWS_AS(evaluate(H, 0.0, -0.1), InvalidArgument);
    }

    TEST_CASE("products of equal bases merge into powers")
    {
        const auto H = heaviside("bump");
        const auto HH = H * H;
        CHECK(HH.kind() == NodeKind::Power);
        CHECK(HH.node().order == 2);
        CHECK(structurally_equal(*(H * H * H).root(), *ipow(H, 3).root()));
        CHECK((constant(2.0) * constant(3.0)).is_constant());
        CHECK(ipow(H, 0).is_constant());
    }

    TEST_CASE("multiplication commutes pointwise")
    {
        const auto v = samples();
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                for (double x : {-0.07, 0.0, 0.03})
                    CHECK(evaluate(v[i] * v[j], x, 0.1) == doctest::Approx(evaluate(v[j] * v[i], x, 0.1)));
    }

    TEST_CASE("differentiation is linear and obeys the Leibniz rule")
    {
        const auto v = samples();
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> xd(-0.15, 0.15);
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            const auto& f = v[i];
            const auto& g = v[i + 1];
            const auto lhs = differentiate(f * g);
            const auto rhs = differentiate(f) * g + f * differentiate(g);
            const auto lin = differentiate(2.5 * f - g);
            const auto lin_rhs = 2.5 * differentiate(f) - differentiate(g);
            for (int k = 0; k < 20; ++k) {
                const double x = xd(rng);
                CHECK(evaluate(lhs, x, 0.1) == doctest::Approx(evaluate(rhs, x, 0.1)).epsilon(1e-12));
                CHECK(evaluate(lin, x, 0.1) == doctest::Approx(evaluate(lin_rhs, x, 0.1)).epsilon(1e-12));
            }
        }
    }

    TEST_CASE("derivatives agree with finite differences")
    {
        const double h = 1e-6;
        const double eps = 0.1;
        for (const auto& g : samples()) {
            const auto d = differentiate(g);
            for (double x : {-0.08, -0.01, 0.0, 0.04, 0.3}) {
                const double fd = (evaluate(g, x + h, eps) - evaluate(g, x - h, eps)) / (2 * h);
                CHECK(evaluate(d, x, eps) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
            }
        }
    }

    TEST_CASE("higher derivatives compose")
    {
        const auto H = heaviside("bump-squared");
        const auto d3 = differentiate(H, 3);
        const auto d111 = differentiate(differentiate(differentiate(H)));
        for (double x : {-0.05, 0.0, 0.02})
            CHECK(evaluate(d3, x, 0.1) == doctest::Approx(evaluate(d111, x, 0.1)).epsilon(1e-12));
        CHECK(structurally_equal(*differentiate(H, 0).root(), *H.root()));
    }

    TEST_CASE("negative powers need a certificate")
    {
        const auto H = heaviside("bump");
        CHECK_THROWS_AS(ipow(H + 1.0, -1), InvalidArgument);
        const auto r = ipow(H + 1.0, -1, Certificate{1.0, 2.0});
        CHECK(evaluate(r, 0.0, 0.1) == doctest::Approx(1.0 / 1.5));
        CHECK_THROWS_AS(ipow(H - 0.5, -1, Certificate{0.1, 1.0}), InvalidArgument);
        const auto r2 = ipow(variable_x(), -1, Certificate{0.5, 2.0});
        CHECK(evaluate(r2, 1.0, 0.1) == 1.0);
        CHECK_THROWS_AS(evaluate(r2, 0.1, 0.1), CertificateViolation);
        CHECK_THROWS_AS(ipow(H + 1.0, -1, Certificate{-1.0, 2.0}), InvalidArgument);
    }

    TEST_CASE("json round trip preserves values")
    {
        for (const auto& g : samples()) {
            const auto text = to_json_string(g);
            const auto back = genfun_from_json_string(text);
            CHECK(to_json_string(back) == text);
            for (double x : {-0.05, 0.0, 0.07})
                CHECK(evaluate(back, x, 0.1) == evaluate(g, x, 0.1));
        }
    }

    TEST_CASE("malformed json is rejected")
    {
        CHECK_THROWS_AS(genfun_from_json_string("{"), InvalidArgument);
        CHECK_THROWS_AS(genfun_from_json_string(R"({"kind": "tan", "children": [{"kind": "x"}]})"), InvalidArgument);
        CHECK_THROWS_AS(genfun_from_json_string(R"({"kind": "const"})"), InvalidArgument);
        CHECK_THROWS_AS(genfun_from_json_string(R"({"kind": "profile", "profile": "nope", "order": 0,
                                                    "children": [{"kind": "x"}]})"),
                        InvalidArgument);
    }

    TEST_CASE("dump17 keeps full precision")
    {
        Json j;
        j["third"] = 1.0 / 3.0;
        j["nan"] = std::nan("");
        const auto s = dump17(j);
        CHECK(s.find("0.33333333333333331") != std::string::npos);
        CHECK(s.find("null") != std::string::npos);
        CHECK(format17(0.1) == "0.10000000000000001");
    }

    TEST_CASE("transition zones and tails")
    {
        const auto H = heaviside("bump");
        const auto zones = transition_zones(H * H, 0.1);
        REQUIRE(zones.size() == 1);
        CHECK(zones[0].first == doctest::Approx(-0.1));
        CHECK(zones[0].second == doctest::Approx(0.1));
        CHECK(tail_value(H, 0.1, -1).value() == 0.0);
        CHECK(tail_value(H, 0.1, +1).value() == 1.0);
        CHECK_FALSE(tail_value(sin(variable_x()), 0.1, 1).has_value());
    }
}
