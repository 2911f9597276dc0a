#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qar/cli.hpp"
#include "qar/csv.hpp"

using namespace qar;
using namespace qar::cli;

namespace {

const std::vector<std::string> kFig2{"--Ec", "1", "--eta", "0.5", "--Tc", "1", "--Tr", "2", "--Th", "10",
                                     "--p",  "0.05", "--g", "0.05"};

std::vector<std::string> with(std::string cmd, std::vector<std::string> extra = {},
                              const std::vector<std::string>& params = kFig2) {
    std::vector<std::string> args{std::move(cmd)};
    args.insert(args.end(), params.begin(), params.end());
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
}

std::string error_of(const std::vector<std::string>& args) {
    try {
        parse_config(args);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("qar_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_args(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::vector<const char*> argv{"qar"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text) *out_text = out.str() + err.str();
    return code;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("flags build the Fig. 2 configuration") {
    const RunConfig cfg = parse_config(with("steady"));
    CHECK(cfg.command == Command::steady);
    CHECK(cfg.params.e_c == 1.0);
    CHECK(cfg.params.eta == 0.5);
    CHECK(cfg.params.t_h == 10.0);
    CHECK(cfg.params.p_c == 0.05);
    CHECK(cfg.params.p_r == 0.05);
    CHECK(cfg.params.p_h == 0.05);
    CHECK(cfg.params.kappa == 0.0);
}

TEST_CASE("individual rates override the shorthand") {
    const RunConfig cfg = parse_config(with("qsl", {"--pc", "0.01", "--ph", "0.02"}));
    CHECK(cfg.params.p_c == 0.01);
    CHECK(cfg.params.p_r == 0.05);
    CHECK(cfg.params.p_h == 0.02);
}

TEST_CASE("missing and out-of-range keys are named") {
    const std::vector<std::string> no_tc{"--Ec", "1", "--eta", "0.5", "--Tr", "2", "--Th", "10", "--p", "0.05", "--g", "0.05"};
    CHECK(error_of(with("steady", {}, no_tc)).find("'Tc'") != std::string::npos);
    const std::vector<std::string> no_p{"--Ec", "1", "--eta", "0.5", "--Tc", "1", "--Tr", "2", "--Th", "10", "--g", "0.05"};
    CHECK(error_of(with("steady", {}, no_p)).find("'p'") != std::string::npos);
    CHECK(error_of(with("steady", {"--eta", "-1"})).find("eta must be > 0") != std::string::npos);
    CHECK(error_of(with("steady", {"--kappa", "0.5"})).find("subspace") != std::string::npos);
    CHECK_FALSE(error_of({"steady", "--bogus", "1"}).empty());
    CHECK_FALSE(error_of({}).empty());
}

TEST_CASE("JSON config with flag overrides") {
    const auto dir = scratch_dir("json");
    const auto file = dir / "fig4.json";
    std::ofstream(file) << R"({"Ec": 1, "eta": 0.5, "Tc": 1, "Tr": 2, "Th": 10,
                              "pc": 0.01, "pr": 0.02, "ph": 0.05, "g": 0.01, "subspace": "none"})";
    const RunConfig cfg = parse_config({"steady", "--config", file.string(), "--g", "0.02"});
    CHECK(cfg.params.p_r == 0.02);
    CHECK(cfg.params.g == 0.02);

    std::ofstream(dir / "bad_key.json") << R"({"Ec": 1, "Tx": 3})";
    CHECK(error_of({"steady", "--config", (dir / "bad_key.json").string()}).find("'Tx'") != std::string::npos);
    std::ofstream(dir / "bad_syntax.json") << R"({"Ec": 1,)";
    CHECK(error_of({"steady", "--config", (dir / "bad_syntax.json").string()}).find("malformed") != std::string::npos);
    std::ofstream(dir / "bad_type.json") << R"({"Ec": "one"})";
    CHECK(error_of({"steady", "--config", (dir / "bad_type.json").string()}).find("Ec must be a number") !=
          std::string::npos);
    CHECK(error_of({"steady", "--config", (dir / "missing.json").string()}).find("cannot open") != std::string::npos);
}

TEST_CASE("sweep and optimize options") {
    const RunConfig cfg = parse_config(with("sweep", {"--knob", "g", "--log", "1e-4", "1e-1", "60"}));
    CHECK(cfg.knob == analysis::SweepKnob::g);
    REQUIRE(cfg.grid.size() == 60);
    CHECK(cfg.grid.front() == 1e-4);
    CHECK(cfg.grid.back() == 1e-1);
    CHECK_FALSE(error_of(with("sweep", {"--knob", "Tc", "--lin", "1", "2", "3"})).empty());
    CHECK_FALSE(error_of(with("sweep", {"--knob", "g"})).empty());
    CHECK_FALSE(error_of(with("sweep", {"--knob", "g", "--lin", "1", "2", "2.5"})).empty());
    CHECK_FALSE(error_of(with("sweep", {"--knob", "eta", "--lin", "0.1", "0.9", "5"})).empty());
    CHECK_FALSE(error_of(with("evolve", {"--t-end", "-1"})).empty());

    const RunConfig opt = parse_config(with("optimize", {"--eta-lo", "0.1"}));
    CHECK(opt.eta_lo == 0.1);
    CHECK(std::isnan(opt.eta_hi));
}

TEST_CASE("steady writes a deterministic one-row CSV") {
    const auto dir = scratch_dir("steady");
    const auto path = (dir / "a.csv").string();
    std::string text;
    REQUIRE(run_args(with("steady", {"--out", path}), &text) == kExitOk);
    CHECK(text.find("is_fridge = true") != std::string::npos);
    const std::string first = slurp(path);
    CHECK(first.rfind("Ec,eta,Tc,Tr,Th,", 0) == 0);
    CHECK(std::count(first.begin(), first.end(), '\n') == 2);
    REQUIRE(run_args(with("steady", {"--out", path})) == kExitOk);
    CHECK(slurp(path) == first);
}

TEST_CASE("output directory from the environment") {
    const auto dir = scratch_dir("env");
    ::setenv("QAR_OUTPUT_DIR", dir.string().c_str(), 1);
    const RunConfig cfg = parse_config(with("sweep", {"--knob", "p", "--log", "1e-3", "1e-1", "5"}));
    CHECK(output_path(cfg) == (dir / "sweep.csv").string());
    REQUIRE(run(cfg, std::cout, std::cerr) == kExitOk);
    ::unsetenv("QAR_OUTPUT_DIR");
    const std::string text = slurp(dir / "sweep.csv");
    CHECK(text.rfind("knob_value,Q_c,tau,chi,gamma,delta,is_fridge,warnings\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("evolve writes a trajectory") {
    const auto dir = scratch_dir("evolve");
    const auto path = (dir / "traj.csv").string();
    REQUIRE(run_args(with("evolve", {"--t-end", "1", "--stride", "10", "--out", path})) == kExitOk);
    const std::string text = slurp(path);
    CHECK(text.rfind("t,J_c,trace_dist_to_steady,P_bar\n0,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 8);
}

TEST_CASE("exit codes") {
    CHECK(run_args({"steady", "--Ec", "1"}) == kExitConfig);
    std::string text;
    // Theorem regime: chi has no interior maximum on the default bracket.
    const std::vector<std::string> theorem{"--Ec", "1e-3", "--eta", "0.02", "--Tc", "1", "--Tr", "30", "--Th", "900",
                                           "--p",  "1e-3", "--g",   "1e-4"};
    CHECK(run_args(with("optimize", {}, theorem), &text) == kExitComputation);
    CHECK(text.find("no interior maximum") != std::string::npos);
    CHECK(run_args(with("optimize"), &text) == kExitOk);
    CHECK(text.find("eta_carnot = 0.80000000000000004") != std::string::npos);
    CHECK(run_args({"--help"}) == kExitOk);
}

TEST_CASE("real formatting round-trips") {
    const double x = 0.1 + 0.2;
    CHECK(std::stod(csv::format_real(x)) == x);
    CHECK(csv::format_real(1.0) == "1");
    CHECK(csv::format_real(std::nan("")) == "nan");
    CHECK(csv::escape("a,b") == "\"a,b\"");
    CHECK(csv::escape("plain") == "plain");
}

}
