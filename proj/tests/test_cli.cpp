// End-to-end checks of the command line tool.  The binary path arrives via
// the SMCURVE_CLI environment variable set by ctest.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "smc/json_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("SMCURVE_CLI");
    REQUIRE_MESSAGE(p != nullptr, "SMCURVE_CLI must point at the built binary");
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("phi subcommand prints the threshold") {
    const auto r = run("phi --k 2 --tol 1e-10");
    CHECK(r.exit_code == 0);
    const double value = std::stod(r.out);
    CHECK(std::abs(value - 2 * std::numbers::pi / 3) < 1e-8);
    CHECK(r.out.find("split: (2,2)") != std::string::npos);
}

TEST_CASE("phi json output carries the split") {
    const auto r = run("phi --k 3 --out json");
    CHECK(r.exit_code == 0);
    const auto j = smc::json::parse(r.out);
    CHECK(std::abs(j.at("phi").get<double>() - 1.962719002) < 1e-7);
    CHECK(j.at("split")[0] == 2);
    CHECK(j.at("split")[1] == 4);
}

TEST_CASE("phi per-split csv has the documented columns") {
    const auto r = run("phi --k 4 --per-split --out csv --tol 1e-9");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("k,m_a,m_b,L_star,extra_root,bisection_width\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 3);  // header + two splits
}

TEST_CASE("deterministic byte-identical output") {
    const auto a = run("phi --k 2 --out json");
    const auto b = run("phi --k 2 --out json");
    CHECK(a.out == b.out);
    const auto c = run("repro --out json --seed 7 2>&1 | head -c 0; echo -n");  // placeholder
    (void)c;
}

TEST_CASE("face subcommand emits a certificate") {
    const auto r = run("face --k 3 --points 0.6283,0.0,-0.6283 --out json");
    CHECK(r.exit_code == 0);
    const auto j = smc::json::parse(r.out);
    CHECK(j.at("status") == "FACE");
    CHECK(j.contains("certificate"));
    const auto poly = smc::poly_from_json(j.at("certificate"));
    CHECK(poly.k == 3);
    CHECK(j.at("margin").get<double>() > 0.0);
}

TEST_CASE("face rejects duplicates with exit code 2") {
    const auto r = run("face --k 2 --points 0.5,0.5");
    CHECK(r.exit_code == 2);
}

TEST_CASE("conjecture matches for k = 4 and rejects odd k") {
    const auto r = run("conjecture --k 4 --out json");
    CHECK(r.exit_code == 0);
    const auto j = smc::json::parse(r.out);
    CHECK(j.at("match").get<bool>());
    CHECK(j.at("residual").get<double>() < 1e-7);
    CHECK(run("conjecture --k 3").exit_code == 2);
}

TEST_CASE("beta sweep emits the documented csv") {
    const auto r = run("beta --kmax 6 --out csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("k,beta_k,sin2_beta_k,bound\n", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("roots subcommand recovers the tangency roots") {
    const auto r = run(R"(roots --poly '{"k":2,"c":1.0,"a":[0.0,-1.0],"b":[0.0,0.0]}' --out json)");
    CHECK(r.exit_code == 0);
    const auto roots = smc::roots_from_json(smc::json::parse(r.out));
    REQUIRE(roots.size() == 3);
    for (const auto& root : roots) CHECK(root.multiplicity == 2);
}

TEST_CASE("deform golden case through the CLI") {
    const auto r = run("deform --one-minus-cos --k 3 --lambda 1.2360679774997896 --out json");
    CHECK(r.exit_code == 0);
    const auto j = smc::json::parse(r.out);
    const auto roots = smc::roots_from_json(j.at("roots"));
    bool quad_at_pi = false;
    for (const auto& root : roots)
        if (root.multiplicity == 4 &&
            smc::circular_distance(root.point.angle, std::numbers::pi) < 1e-6)
            quad_at_pi = true;
    CHECK(quad_at_pi);
}

TEST_CASE("polytope csv reports the paper bound") {
    const auto r = run("polytope --k 2 --m 3 --spread 0.05 --dim 1 --out csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("dim,verified,unknown,not_face,total,bound_from_paper\n", 0) == 0);
    // parse the data row
    const auto line = r.out.substr(r.out.find('\n') + 1);
    int dim, verified, unknown, notface, total, bound;
    REQUIRE(std::sscanf(line.c_str(), "%d,%d,%d,%d,%d,%d", &dim, &verified, &unknown, &notface,
                        &total, &bound) == 6);
    CHECK(dim == 1);
    CHECK(total == 66);
    CHECK(bound == 4 * 15 - 4 * 3);
    CHECK(verified >= bound);
}

TEST_CASE("explicit angle lists reach the classifier") {
    const auto r = run("polytope --k 2 --dim 1 --angles 0.0,0.5,1.0,1.5 --out json");
    CHECK(r.exit_code == 0);
    const auto j = smc::json::parse(r.out);
    CHECK(j.at("total") == 6);
    CHECK(j.at("verified") == 6);  // all pairs within the threshold arc
}

TEST_CASE("degrees flag converts angles") {
    const auto rad = run("face --k 2 --points 0.0,1.0 --out json");
    const auto deg = run("face --k 2 --points 0.0,57.29577951308232 --out json");
    CHECK(rad.out == deg.out);
}

TEST_CASE("output files are written byte-identically") {
    const std::string path1 = "/tmp/smc_cli_test_a.json";
    const std::string path2 = "/tmp/smc_cli_test_b.json";
    CHECK(run("beta --kmax 8 --out json --output " + path1).exit_code == 0);
    CHECK(run("beta --kmax 8 --out json --output " + path2).exit_code == 0);
    std::ifstream f1(path1), f2(path2);
    std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
    std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
    CHECK(s1 == s2);
    CHECK_FALSE(s1.empty());
    std::remove(path1.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("invalid flags exit with code 2") {
    CHECK(run("phi").exit_code == 2);                  // missing --k
    CHECK(run("frobnicate --k 2").exit_code == 2);     // unknown subcommand
    CHECK(run("roots --poly 'not json'").exit_code == 2);
}

TEST_CASE("corrupted golden values fail the repro run by name") {
    const std::string golden = "/tmp/smc_bad_golden.json";
    {
        std::ofstream out(golden);
        out << R"({"phi_2": 2.2})";
    }
    const auto r = run("repro --golden " + golden + " --out text");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("[FAIL] criterion 1") != std::string::npos);
    CHECK(r.out.find("phi_2") != std::string::npos);
    std::remove(golden.c_str());
}

TEST_SUITE_END();
