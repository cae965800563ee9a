#include "colombeau/colombeau.h"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

TEST_SUITE("capi")
{
    TEST_CASE("build, evaluate and integrate through handles")
    {
        cb_genfun* H = nullptr;
        cb_genfun* d = nullptr;
        cb_genfun* HH = nullptr;
        cb_genfun* g = nullptr;
        REQUIRE(cb_genfun_heaviside("bump", &H) == CB_OK);
        REQUIRE(cb_genfun_dirac("bump", &d) == CB_OK);
        REQUIRE(cb_genfun_mul(H, H, &HH) == CB_OK);
        cb_genfun* diff = nullptr;
        REQUIRE(cb_genfun_sub(HH, H, &diff) == CB_OK);
        REQUIRE(cb_genfun_mul(diff, d, &g) == CB_OK);

        double v = 0.0;
        double err = 0.0;
        REQUIRE(cb_integrate(g, 0.01, &v, &err) == CB_OK);
        CHECK(v == doctest::Approx(-1.0 / 6.0).epsilon(1e-12));
        REQUIRE(cb_genfun_evaluate(H, 0.0, 0.1, &v) == CB_OK);
        CHECK(v == 0.5);
        REQUIRE(cb_pair(d, 0.0, 1.0, 1.0, 1e-3, &v, nullptr) == CB_OK);
        CHECK(v == doctest::Approx(1.0).epsilon(1e-6));

        char* json = nullptr;
        REQUIRE(cb_genfun_to_json(g, &json) == CB_OK);
        cb_genfun* back = nullptr;
        REQUIRE(cb_genfun_from_json(json, &back) == CB_OK);
        double v2 = 0.0;
        cb_genfun_evaluate(g, 0.003, 0.01, &v);
        cb_genfun_evaluate(back, 0.003, 0.01, &v2);
        CHECK(v == v2);
        cb_string_free(json);

        for (cb_genfun* p : {H, d, HH, diff, g, back})
            cb_genfun_free(p);
    }

    TEST_CASE("errors map to status codes with a message")
    {
        cb_genfun* out = nullptr;
        CHECK(cb_genfun_heaviside("no-such", &out) == CB_INVALID_ARGUMENT);
        CHECK(out == nullptr);
        CHECK(std::strlen(cb_last_error()) > 0);
        CHECK(cb_genfun_from_json("{", &out) == CB_INVALID_ARGUMENT);
        CHECK(cb_genfun_heaviside(nullptr, &out) == CB_INVALID_ARGUMENT);

        cb_genfun* x = nullptr;
        cb_genfun_x(&x);
        double v = 0.0;
        CHECK(cb_integrate(x, 0.1, &v, nullptr) == CB_UNSUPPORTED);
        CHECK(cb_genfun_evaluate(x, 0.0, 2.0, &v) == CB_INVALID_ARGUMENT);
        cb_genfun* inv = nullptr;
        CHECK(cb_genfun_pow(x, -1, &inv) == CB_INVALID_ARGUMENT);
        cb_genfun* H = nullptr;
        cb_genfun_heaviside("bump", &H);
        cb_genfun* shifted = nullptr;
        cb_genfun* half = nullptr;
        cb_genfun_constant(-0.5, &half);
        cb_genfun_add(H, half, &shifted);
        CHECK(cb_genfun_pow_certified(shifted, -1, 0.1, 1.0, &inv) == CB_INVALID_ARGUMENT);
        REQUIRE(cb_genfun_pow_certified(x, -1, 0.5, 2.0, &inv) == CB_OK);
        CHECK(cb_genfun_evaluate(inv, 0.1, 0.1, &v) == CB_CERTIFICATE);
        cb_genfun_free(inv);
        CHECK(cb_genfun_evaluate(H, 0.0, 0.1, &v) == CB_OK);
        CHECK(std::string(cb_last_error()).empty());
        for (cb_genfun* p : {x, H, shifted, half})
            cb_genfun_free(p);
        CHECK(std::string(cb_status_name(CB_NO_SHOCK)) == "no admissible shock");
    }

    TEST_CASE("last error is per thread")
    {
        cb_genfun* out = nullptr;
        cb_genfun_heaviside("no-such", &out);
        std::string other;
        std::thread t([&] { other = cb_last_error(); });
        t.join();
        CHECK(other.empty());
        CHECK(std::strlen(cb_last_error()) > 0);
    }

    TEST_CASE("shock speeds")
    {
        double c[2];
        size_t n = 0;
        REQUIRE(cb_shock_speeds(1.0, 0.0, 0.0, -1.0, 0.5, c, &n) == CB_OK);
        REQUIRE(n == 2);
        CHECK(c[0] == doctest::Approx(0.7807764064044151).epsilon(1e-14));
        CHECK(c[1] == doctest::Approx(-1.2807764064044151).epsilon(1e-14));
        CHECK(cb_shock_speeds(1.0, 0.0, 0.0, 0.0, 0.5, c, &n) == CB_INVALID_ARGUMENT);
    }

    TEST_CASE("run_command")
    {
        char* report = nullptr;
        int passed = -1;
        REQUIRE(cb_run_command("demo-minus-one-sixth", R"({"profile": "bump", "eps": [0.1, 0.01]})", &report,
                               &passed) == CB_OK);
        CHECK(passed == 1);
        CHECK(std::string(report).find("\"max_abs_deviation\"") != std::string::npos);
        cb_string_free(report);
        CHECK(cb_run_command("demo-minus-one-sixth", "{\"bogus\": 1}", &report, &passed) == CB_INVALID_ARGUMENT);
        CHECK(cb_run_command("demo-minus-one-sixth", "{not json", &report, &passed) == CB_PARSE);
        CHECK(cb_run_command("riemann", R"({"u_r": 0})", &report, &passed) == CB_INVALID_ARGUMENT);
        const char* const* names = cb_command_names();
        int count = 0;
        while (names[count])
            ++count;
        CHECK(count == 6);
    }
}
