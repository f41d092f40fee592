#include <pvi/cli.hpp>
#include <pvi/picard.hpp>

#include <doctest.h>

#include <sstream>

using namespace pvi;
using nlohmann::json;

namespace
{

RunOutcome cli(const std::string &line)
{
    std::istringstream ss(line);
    std::vector<std::string> argv;
    std::string t;
    while (ss >> t) {
        argv.push_back(t);
    }
    return run(argv);
}

json doc(const RunOutcome &o) { return json::parse(o.out); }

} // namespace

TEST_CASE("classify labels the (2,3) case")
{
    auto o = cli("classify --nu1 2/3 --nu2 0");
    REQUIRE(o.exit_code == 0);
    auto p = doc(o)["outputs"];
    CHECK(p["M"] == 2);
    CHECK(p["N"] == 3);
    CHECK(p["Nhat"] == 3);
    CHECK(p["Mhat"] == 1);
    CHECK(p["group"] == "D(3)");
    CHECK(p["coxeter"] == "A2");
}

TEST_CASE("eval reports the library value and chart")
{
    auto o = cli("eval --kind picard --nu1 1/2 --nu2 1/3 --x 0.4+0i");
    REQUIRE(o.exit_code == 0);
    auto p = doc(o)["outputs"];
    cplx want = picard_eval(0.4, {0.5, 1.0 / 3}, choose_chart(0.4));
    CHECK(p["y"]["re"].get<double>() == want.real());
    CHECK(p["y"]["im"].get<double>() == want.imag());
    CHECK(p["chart"] == to_string(choose_chart(0.4)));

    auto q = doc(cli("eval --kind picard --nu1 1/2 --nu2 1/3 --x 0.4 --chart one"))["outputs"];
    CHECK(q["chart"] == "one");
}

TEST_CASE("orbit listing and CSV flattening")
{
    auto o = cli("orbit --angles 0,1/4,3/4 --cap 100000");
    REQUIRE(o.exit_code == 0);
    auto p = doc(o)["outputs"];
    CHECK(p["size"] == 6);
    CHECK(p["rows"].size() == 6);
    CHECK(p["finite"] == true);

    auto c = cli("orbit --angles 0,1/4,3/4 --format csv");
    CHECK(c.out.rfind("r1,r2,r3\n", 0) == 0);
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 7);

    auto inf = doc(cli("orbit --triple 3,3,3 --cap 20"))["outputs"];
    CHECK(inf["finite"] == false);
}

TEST_CASE("output is deterministic, sorted and uses fixed digits")
{
    for (const char *line : {"verify --kind chazy --nu 2", "asymptotics --nu1 1/2 --nu2 1/3", "monodromy --nu1 0.3 --nu2 0.7"}) {
        auto a = cli(line), b = cli(line);
        CHECK(a.out == b.out);
        CHECK(a.exit_code == b.exit_code);
    }
    auto o = cli("rational --a 2 --x 0.25");
    // 0.4 needs 17 digits to print exactly
    CHECK(o.out.find("0.40000000000000002") != std::string::npos);
    auto s = cli("rational --a 2 --x 0.25 --precision 5");
    CHECK(s.out.find("\"re\":0.4}") != std::string::npos);
    CHECK(o.out.find("{\"command\":\"rational\",\"diagnostics\":") == 0);
    CHECK(dump_json(json{{"b", 1.0}, {"a", 2}}, 17) == "{\"a\":2,\"b\":1}");
}

TEST_CASE("exit codes")
{
    CHECK(cli("eval --bogus").exit_code == 2);
    CHECK(cli("nosuch").exit_code == 2);
    CHECK(cli("").exit_code == 2);
    auto d = cli("eval --kind picard --nu1 0 --nu2 0 --x 0.3");
    CHECK(d.exit_code == 2);
    CHECK(doc(d)["outputs"].contains("error"));
    CHECK(cli("eval --kind picard --nu1 1/2").exit_code == 2);
    CHECK(cli("classify --nu1 2/3 --nu2 0 --format xml").exit_code == 2);

    CHECK(cli("rational --a 2 --x 0.25").exit_code == 0);
    auto f = cli("rational --a 2 --x 0.3 --tol 1e-300");
    CHECK(f.exit_code == 3);
    // the stated log coefficient at 0 is half the fitted one
    CHECK(cli("asymptotics --kind chazy --nu 2 --point 0").exit_code == 3);
    CHECK(cli("asymptotics --kind chazy --nu 2 --point inf").exit_code == 0);
}

TEST_CASE("every diagnostic carries a tolerance")
{
    for (const char *line : {"verify --kind chazy --nu 1+1i", "continue --loop gamma1 --kind chazy --nu 2",
                             "continue --loop gamma0 --nu1 1/3 --nu2 1/3", "dihedral --M 1 --N 2",
                             "verify --nu1 1/2 --nu2 0 --relation square-root --symmetry T0inf",
                             "verify --kind parametric --family a2 --x 0.4+0.1i"}) {
        auto o = cli(line);
        CHECK(o.exit_code == 0);
        auto d = doc(o)["diagnostics"];
        REQUIRE(!d.empty());
        for (auto &g : d) {
            CHECK(g.contains("tolerance"));
            CHECK(g["pass"] == true);
        }
    }
}

TEST_CASE("transform")
{
    auto p = doc(cli("transform --gamma gamma0 --nu1 1/2 --nu2 1/3"))["outputs"];
    auto want = gamma2_act_params(Gamma2Element::gamma0(), {0.5, 1.0 / 3});
    CHECK(p["nu1"]["re"].get<double>() == want.nu1.real());
    CHECK(p["nu2"]["re"].get<double>() == want.nu2.real());
    auto s = doc(cli("transform --symmetry T0inf --x 2 --y 3"))["outputs"];
    CHECK(s["x"]["re"] == 0.5);
    CHECK(s["y"]["re"] == 1.5);
    CHECK(cli("transform --gamma 1,1,0,1 --nu1 1/2 --nu2 1/3").exit_code == 2);
}
