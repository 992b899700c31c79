#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(DIXON_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json report(const Run& r) { return nlohmann::json::parse(r.out); }

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(DIXON_GOLDEN_DIR) + "/" + name, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("fvector")
{
    const auto r = run("fvector --p 3 --n 4");
    CHECK(r.code == 0);
    const auto j = report(r);
    CHECK(j["f_vector"] == nlohmann::json({"1", "64", "216", "64", "1"}));
    CHECK(j["reduced_euler_characteristic"] == "-90");
    CHECK(j["pass"] == true);

    const auto e = run("fvector --p 3 --n 3 --enumerate");
    CHECK(e.code == 0);
    CHECK(report(e)["checks"]["enumeration_matches_formula"] == true);

    CHECK(run("fvector --p 0 --n 2").code == 2);
    CHECK(run("fvector --n 5 --enumerate --budget 50").code == 3);
    CHECK(run("fvector").code == 2);
    CHECK(run("nonsense").code == 2);
}

TEST_CASE("shelling")
{
    const auto ok = run("shelling --n 4");
    CHECK(ok.code == 0);
    const auto j = report(ok);
    CHECK(j["violation_count"] == 0);
    CHECK(j["facet_count"] == 217);
    CHECK(j["witnesses"].size() == 100);

    const auto rev = run("shelling --n 4 --order reversed");
    CHECK(rev.code == 1);
    CHECK(report(rev)["violation_count"].get<int>() >= 1);

    const auto both = run("shelling --n 4 --witness-mode both");
    CHECK(both.code == 0);
    CHECK(report(both)["mode_disagreements"] == "0");

    CHECK(run("shelling --n 6 --budget 1000").code == 3);
    CHECK(run("shelling --n 3 --order sideways").code == 2);
}

TEST_CASE("betti")
{
    const auto both = run("betti --n 2");
    CHECK(both.code == 0);
    const auto j = report(both);
    CHECK(j["betti_shelling"] == nlohmann::json({"0", "6", "0"}));
    CHECK(j["betti_matrix"] == nlohmann::json({"0", "6", "0"}));

    const auto single = report(run("betti --n 5 --method shelling"));
    CHECK(single.contains("betti_shelling"));
    CHECK_FALSE(single.contains("betti_matrix"));

    const auto g2 = run("betti --p 2 --n 4 --seed 11");
    CHECK(g2.code == 0);
    CHECK(report(g2)["alternating_sum_matrix"] == "-6");
    CHECK(report(g2)["shuffle_invariant"] == true);

    CHECK(run("betti --n 4 --method matrix --budget 10").code == 3);
}

TEST_CASE("identity")
{
    auto d = run("identity dixon --n-max 10");
    CHECK(d.code == 0);
    CHECK(report(d)["passed"] == 10);
    auto t = run("identity 3f2 --max 5");
    CHECK(t.code == 0);
    CHECK(report(t)["passed"] == 216);
    auto a = run("identity aigner --n-max 6");
    CHECK(a.code == 0);
    CHECK(report(a)["rows"].size() == 6);
    CHECK(run("identity wrong").code == 2);
}

TEST_CASE("genfun and export")
{
    const auto xy = run("genfun XY --truncate 6");
    CHECK(xy.code == 0);
    CHECK(xy.out == golden("series_XY_T6.txt"));
    CHECK(run("genfun P --truncate 6").out == golden("series_P_T6.txt"));

    const auto align = run("genfun --check-alignment --n-max 6");
    CHECK(align.code == 0);
    CHECK(report(align)["delta"] == 1);

    const auto facets = run("export facets --n 3");
    CHECK(facets.code == 0);
    CHECK(facets.out == golden("facets_p3_n3.txt"));
    CHECK(run("export boundary --n 2 --k 1").out == golden("boundary_p3_n2_k1.txt"));

    CHECK(run("export facets --n 3 --out /nonexistent-dir/facets.txt").code == 4);
    CHECK(run("genfun").code == 2);
}

TEST_CASE("reports are byte-identical across runs and thread counts")
{
    for (const std::string args : {"shelling --n 4", "shelling --n 3 --order reversed --witness-mode both",
                                   "betti --n 4", "genfun --check-alignment --n-max 5"}) {
        const auto a = run(args + " --threads 1");
        const auto b = run(args + " --threads 3");
        const auto c = run(args + " --threads 1");
        INFO(args);
        CHECK(a.out == b.out);
        CHECK(a.out == c.out);
    }
}
