#include "colombeau/error.hpp"
#include "commands.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace colombeau;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("colombeau-test-" + name);
    std::filesystem::remove_all(p);
    return p;
}

}  // namespace

TEST_SUITE("commands")
{
    TEST_CASE("demo passes on defaults and on a single entry")
    {
        const auto r = run_command("demo-minus-one-sixth", Json::object());
        CHECK(r.passed);
        CHECK(r.report["results"].size() == 33);
        const auto one = run_command("demo-minus-one-sixth", Json{{"profile", "bump-squared"}, {"eps", 0.01}});
        CHECK(one.passed);
        CHECK(one.report["results"].size() == 1);
    }

    TEST_CASE("unknown keys and bad values are rejected before computing")
    {
        CHECK_THROWS_AS(run_command("demo-minus-one-sixth", Json{{"profiles", "bump"}}), InvalidArgument);
        CHECK_THROWS_AS(run_command("schwartz", Json{{"ladder", "4:8"}}), InvalidArgument);
        CHECK_THROWS_AS(run_command("schwartz", Json{{"ladder", "x:14"}}), InvalidArgument);
        CHECK_THROWS_AS(run_command("riemann", Json{{"left", {1.0, 0.0}}}), InvalidArgument);
        CHECK_THROWS_AS(run_command("riemann", Json{{"u_r", "fast"}}), InvalidArgument);
        CHECK_THROWS_AS(run_command("simulate", Json{{"scheme", "weno"}}), InvalidArgument);
        CHECK_THROWS_AS(run_command("classify", Json{{"expr", "heaviside^0"}}), InvalidArgument);
        CHECK_THROWS_AS(run_command("pair", Json{{"expr", "H"}, {"battery", {{{"center", 0}, {"width", 1}}}}}),
                        InvalidArgument);
        CHECK_THROWS_AS(run_command("launch", Json::object()), InvalidArgument);
        CHECK_THROWS_AS(run_command("schwartz", Json{{"command", "pair"}}), InvalidArgument);
    }

    TEST_CASE("schwartz triple and the degenerate battery")
    {
        const auto r = run_command("schwartz", Json{{"powers", {5}}});
        CHECK(r.passed);
        CHECK(r.report["triple"] == Json::array({"true", "true", "false"}));
        CHECK(r.report["checks"][3]["check"] == "H^5 ~ H");
        const auto d = run_command("schwartz", Json{{"battery", {{{"center", 3.0}, {"halfwidth", 1.0}}}}});
        CHECK_FALSE(d.passed);
        CHECK(d.report["warnings"].size() == 7);
    }

    TEST_CASE("riemann reports both roots and the precondition")
    {
        const auto r = run_command("riemann", Json::object());
        CHECK(r.passed);
        REQUIRE(r.report["solutions"].size() == 2);
        CHECK(r.report["solutions"][0]["solution"]["c"].get<double>() == doctest::Approx(0.780776406404415));
        CHECK(r.report["solutions"][1]["solution"]["c"].get<double>() == doctest::Approx(-1.28077640640442));
        CHECK_THROWS_AS(run_command("riemann", Json{{"u_r", 0.0}}), InvalidArgument);
        const auto w = run_command("riemann", Json{{"mode", "all-weak"}, {"A", {0.5, 2.0 / 3.0}}});
        CHECK(w.passed);
        CHECK(w.report["leading_speeds"][1]["c"].get<double>() == doctest::Approx(0.720759220056126));
    }

    TEST_CASE("simulate: default passes, constant state finds no jump, coarse grid obeys the tolerance")
    {
        const auto r = run_command("simulate", Json::object());
        CHECK(r.passed);
        const auto flat = run_command("simulate", Json{{"u_r", 0.0}});
        CHECK_FALSE(flat.passed);
        CHECK(flat.report["note"].get<std::string>().find("no jump found") == 0);
        const auto coarse = run_command("simulate", Json{{"cells", 100}, {"tolerance", 1e-4}});
        CHECK_FALSE(coarse.passed);
        CHECK(std::abs(coarse.report["relative_error"].get<double>()) > 1e-4);
    }

    TEST_CASE("classify tests")
    {
        auto r = run_command("classify", Json{{"expr", "dirac"}, {"test", "sup"}});
        CHECK(r.report["result"]["growth_order"] == 1);
        r = run_command("classify", Json{{"expr", "heaviside^2"}, {"expr2", "heaviside"}, {"test", "associated"}});
        CHECK(r.report["verdict"] == "true");
        r = run_command("classify", Json{{"expr", "heaviside"}, {"max_deriv", 2}});
        CHECK(r.report["moderate"] == true);
        CHECK_THROWS_AS(run_command("classify", Json{{"expr", "dirac"}, {"test", "sup"}, {"expr2", "dirac"}}),
                        InvalidArgument);
    }

    TEST_CASE("identical configs write byte-identical files")
    {
        const auto a = scratch("det-a");
        const auto b = scratch("det-b");
        for (const auto& dir : {a, b}) {
            run_command("simulate", Json{{"cells", 100}, {"out", dir.string()}});
            run_command("riemann", Json{{"out", (dir / "riemann").string()}, {"profile", "bump"}});
        }
        std::size_t files = 0;
        for (const auto& e : std::filesystem::recursive_directory_iterator(a)) {
            if (!e.is_regular_file())
                continue;
            ++files;
            const auto rel = std::filesystem::relative(e.path(), a);
            REQUIRE(slurp(e.path()) == slurp(b / rel));
        }
        CHECK(files > 10);
        CHECK(slurp(a / "snapshot_00000.csv").rfind("x,rho,u,tau\n", 0) == 0);
        std::filesystem::remove_all(a);
        std::filesystem::remove_all(b);
    }
}
