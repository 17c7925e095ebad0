#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(HCV_BIN_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("verify exit codes") {
    CHECK(run("verify --n 5 --a 0.6 --theta 0.9") == 0);
    CHECK(run("verify --n 5 --a 1.5") == 64);
    CHECK(run("verify --n 4 --a 0.333333333 --theta 1.0") == 0);
    CHECK(run("verify --badflag") == 64);
    CHECK(run("") == 64);
}

TEST_CASE("tables exit codes") {
    CHECK(run("tables --table 1 --n 7 --a 0.75 --theta 1.1") == 0);
    CHECK(run("tables --table 3 --n 6 --a 0.7 --theta 0.3") == 64);
    CHECK(run("tables --table 4 --n 6 --a 0.7 --theta 0.4") == 0);
}

TEST_CASE("sweep produces deterministic byte-identical csv") {
    const std::string out1 = "cli_sweep_1.csv";
    const std::string out2 = "cli_sweep_2.csv";
    const std::string flags =
        "sweep --n-min 1 --n-max 2 --a-count 2 --theta-count 4 --radial 16 --angular 32";
    REQUIRE(run(flags + " --output " + out1) == 0);
    REQUIRE(run(flags + " --output " + out2) == 0);
    const std::string s1 = slurp(out1);
    CHECK(!s1.empty());
    CHECK(s1 == slurp(out2));
    CHECK(s1.rfind("n,a,theta,case_branch,", 0) == 0);
    std::remove(out1.c_str());
    std::remove(out2.c_str());

    const std::string json = "cli_sweep.json";
    REQUIRE(run("sweep --n-min 2 --n-max 2 --a-count 1 --theta-count 2 --radial 8 --angular 8 "
                "--format json --output " +
                json) == 0);
    const std::string js = slurp(json);
    CHECK(js.front() == '[');
    CHECK(js.find("\"verdict\": \"pass\"") != std::string::npos);
    std::remove(json.c_str());
}

TEST_CASE("render emits svg polylines with an embedded config") {
    const std::string out = "cli_render.svg";
    REQUIRE(run("render --map F_a --a 0 --r 0.9 --radial 4 --angular 8 --output " + out) == 0);
    const std::string svg = slurp(out);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("hcv render map=F_a") != std::string::npos);
    std::remove(out.c_str());

    const std::string conv = "cli_render_conv.svg";
    REQUIRE(run("render --map conv --n 3 --a 0.5 --theta 0 --r 0.9 --radial 3 --angular 6 "
                "--output " +
                conv) == 0);
    CHECK(slurp(conv).find("<polyline") != std::string::npos);
    const std::string csv = slurp(conv + ".csv");
    CHECK(csv.rfind("j,z_re,z_im,phi_re,phi_im,f_re,f_im", 0) == 0);
    std::remove(conv.c_str());
    std::remove((conv + ".csv").c_str());

    CHECK(run("render --map f_beta --beta 1.5707963 --n 1 --theta 0 --r 0.9 --radial 3 "
              "--angular 6 --output cli_render_fb.svg") == 0);
    std::remove("cli_render_fb.svg");

    CHECK(run("render --map conv --r 1.5 --output bad.svg") == 64);
}

TEST_CASE("env override for the minor tolerance is accepted") {
    const std::string cmd = std::string("HCV_TOLERANCE_MINOR=1e-6 ") + HCV_BIN_PATH +
                            " verify --n 5 --a 0.6 --theta 0.9 >/dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
}
