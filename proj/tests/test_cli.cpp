#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "hosc/multi_index.hpp"
#include "hosc/norms.hpp"
#include "hosc/propagators.hpp"
#include "hosc/report.hpp"
#include "hosc/spectral.hpp"

using namespace hosc;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "hosc_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    fs::path out = work_dir() / "stdout.txt";
    fs::path err = work_dir() / "stderr.txt";
    std::string cmd = std::string(HOSC_CLI_PATH) + " " + args + " >" + out.string() +
                      " 2>" + err.string();
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = (raw == -1) ? -1 : WEXITSTATUS(raw);
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

fs::path write_field(const std::string& name, const SpectralField& f) {
    fs::path p = work_dir() / name;
    write_json_file(p.string(), field_to_json(f));
    return p;
}

}  // namespace

TEST_CASE("verify --list names the registered suites") {
    RunResult r = run_cli("verify --list");
    CHECK(r.code == 0);
    CHECK(r.out.find("identity-sqrt2pi") != std::string::npos);
    CHECK(r.out.find("mehler-oracle") != std::string::npos);
}

TEST_CASE("verify runs a suite, writes the report, and exits zero on pass") {
    fs::path rep_path = work_dir() / "identity.json";
    fs::path csv_path = work_dir() / "identity.csv";
    RunResult r = run_cli("verify --suite identity-sqrt2pi --dim 1 --cutoff 8 --trials 5 "
                          "--seed 42 --out " + rep_path.string() + " --csv " + csv_path.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    Json rep = read_json_file(rep_path.string());
    CHECK(rep["suite"] == "identity-sqrt2pi");
    CHECK(rep["pass"] == true);
    std::string csv = slurp(csv_path);
    CHECK(csv.rfind("suite,cutoff,trial,lhs,rhs,ratio\n", 0) == 0);
}

TEST_CASE("hypothesis violations exit 2 and cite the constraint") {
    RunResult r = run_cli("verify --suite main-theorem --dim 3 --p 1.2 --q 2 --s 0");
    CHECK(r.code == 2);
    CHECK(r.err.find("|1/2 - 1/p| < 1/(2n)") != std::string::npos);

    r = run_cli("verify --suite sjogren-torrea --dim 1 --p 2 --q 6");
    CHECK(r.code == 2);
    CHECK(r.err.find("2/q = n(1/2 - 1/p)") != std::string::npos);

    r = run_cli("verify --suite corollary-l2 --dim 3 --p 6 --q 2");
    CHECK(r.code == 2);
    CHECK(r.err.find("p < 2n/(n-2)") != std::string::npos);
}

TEST_CASE("bad invocations exit 2") {
    CHECK(run_cli("verify --suite no-such-suite").code == 2);
    CHECK(run_cli("verify").code == 2);          // missing suite
    CHECK(run_cli("norm --field nope.json").code == 2);  // missing required flag
    CHECK(run_cli("definitely-not-a-subcommand").code == 2);
    CHECK(run_cli("verify --suite identity-sqrt2pi --p banana").code == 2);
}

TEST_CASE("norm prints documented closed-form values") {
    SpectralField phi0 = unit_field(1, 1, MultiIndex{{0}});
    fs::path fp = write_field("phi0.json", phi0);
    RunResult r = run_cli("norm --field " + fp.string() + " --norm Lp:p=2");
    CHECK(r.code == 0);
    CHECK(r.out == "1.000000000000000\n");

    r = run_cli("norm --field " + fp.string() + " --norm TL:r=1,p=2,q=2");
    CHECK(r.code == 0);
    CHECK(r.out == "1.000000000000000\n");

    SpectralField e2 = unit_field(1, 5, MultiIndex{{2}});
    fs::path ep = write_field("e2.json", e2);
    r = run_cli("norm --field " + ep.string() + " --norm SobolevH2:s=2");
    CHECK(r.code == 0);
    CHECK(r.out == "5.000000000000000\n");

    r = run_cli("norm --field " + ep.string() + " --norm Lp:p=0");
    CHECK(r.code == 2);
}

TEST_CASE("propagate: oscillator over a full period returns the input") {
    SpectralField e2 = unit_field(1, 5, MultiIndex{{2}});
    fs::path fp = write_field("prop_in.json", e2);
    fs::path up = work_dir() / "prop_out.json";
    RunResult r = run_cli("propagate --field " + fp.string() +
                          " --evolution oscillator --t 6.283185307179586 --out " + up.string());
    CHECK(r.code == 0);
    Json u = read_json_file(up.string());
    auto grid = default_grid(1, 5);
    auto expect = synthesize(e2, grid);
    REQUIRE(u["values"].size() == 1);
    REQUIRE(u["values"][0].size() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
        double re = u["values"][0][i][0].get<double>();
        double im = u["values"][0][i][1].get<double>();
        CHECK(std::abs(Complex{re, im} - expect[i]) < 1e-12);
    }
}

TEST_CASE("propagate: heat scales an eigenfunction by e^{-t level}") {
    SpectralField e2 = unit_field(1, 5, MultiIndex{{2}});
    fs::path fp = write_field("heat_in.json", e2);
    fs::path up = work_dir() / "heat_out.json";
    RunResult r = run_cli("propagate --field " + fp.string() +
                          " --evolution heat --t 0.5 --out " + up.string());
    CHECK(r.code == 0);
    Json u = read_json_file(up.string());
    auto grid = default_grid(1, 5);
    auto base = synthesize(e2, grid);
    double decay = std::exp(-2.5);
    for (std::size_t i = 0; i < base.size(); ++i) {
        double re = u["values"][0][i][0].get<double>();
        CHECK(re == doctest::Approx(decay * base[i].real()).epsilon(1e-12));
    }

    CHECK(run_cli("propagate --field " + fp.string() +
                  " --evolution heat --t -1 --out " + up.string()).code == 2);
}

TEST_CASE("propagate: free evolution matches the Gaussian closed form") {
    SpectralField phi0 = unit_field(1, 1, MultiIndex{{0}});
    fs::path fp = write_field("free_in.json", phi0);
    fs::path up = work_dir() / "free_out.json";
    RunResult r = run_cli("propagate --field " + fp.string() +
                          " --evolution free --t 0.3 --out " + up.string());
    CHECK(r.code == 0);
    Json u = read_json_file(up.string());
    auto grid = default_grid(1, 1);
    Complex denom{1.0, 0.6};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double x = grid.points[i];
        Complex expect = kPiMQuarter / std::sqrt(denom) * std::exp(-x * x / (2.0 * denom));
        Complex got{u["values"][0][i][0].get<double>(), u["values"][0][i][1].get<double>()};
        CHECK(std::abs(got - expect) < 5e-6);
    }

    // beyond the certified horizon: resolution exit code
    CHECK(run_cli("propagate --field " + fp.string() +
                  " --evolution free --t 20 --out " + up.string()).code == 3);
}

TEST_CASE("sweep emits one row per cutoff and is deterministic") {
    std::string cmd = "sweep --suite wainger --cutoffs 8,12,16 --p 2 --q 6 --trials 5 --seed 7";
    RunResult a = run_cli(cmd);
    CHECK((a.code == 0 || a.code == 1));
    std::istringstream lines(a.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "suite,cutoff,p,q,c_hat,pass");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);

    RunResult b = run_cli(cmd);
    CHECK(a.out == b.out);

    CHECK(run_cli("sweep --suite wainger --cutoffs 8").code == 2);  // empty exponent grid
}

TEST_CASE("config files reproduce flag invocations byte for byte") {
    fs::path cfg = work_dir() / "verify.ini";
    {
        std::ofstream out(cfg);
        out << "[verify]\n"
            << "suite=mehler-oracle\n"
            << "t=0.5,1\n"
            << "format=json\n";
    }
    RunResult from_cfg = run_cli("--config " + cfg.string() + " verify");
    RunResult from_flags = run_cli("verify --suite mehler-oracle --t 0.5,1 --format json");
    CHECK(from_cfg.code == 0);
    CHECK(from_flags.code == 0);
    CHECK(from_cfg.out == from_flags.out);
    CHECK(from_cfg.out.find("\"suite\": \"mehler-oracle\"") != std::string::npos);
}

TEST_CASE("verify --format json prints the report body") {
    RunResult r = run_cli("verify --suite mehler-oracle --t 0.5 --format json");
    CHECK(r.code == 0);
    Json rep = Json::parse(r.out);
    CHECK(rep["suite"] == "mehler-oracle");
    CHECK(rep["pass"] == true);
}
