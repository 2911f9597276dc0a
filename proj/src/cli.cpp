// cli.cpp - Command-line front end

#include "qar/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qar/acceptance.hpp"
#include "qar/csv.hpp"
#include "qar/dynamics.hpp"
#include "qar/qsl.hpp"
#include "qar/steady.hpp"

namespace qar::cli {

namespace {

using csv::format_real;
using nlohmann::json;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string>& numeric_keys() {
    static const std::vector<std::string> keys{"Ec", "eta", "Tc", "Tr", "Th", "p", "pc", "pr", "ph", "g", "kappa"};
    return keys;
}

std::string allowed_keys() {
    std::string s;
    for (const auto& k : numeric_keys()) s += k + ", ";
    return s + "subspace";
}

struct RawParams {
    std::map<std::string, double> values;
    std::optional<std::string> subspace;
};

RawParams load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: malformed JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level of '" + path + "' must be an object");

    RawParams raw;
    for (const auto& [key, value] : doc.items()) {
        if (key == "subspace") {
            if (!value.is_string()) throw ConfigError("config: subspace must be a string (none, outer, inner)");
            raw.subspace = value.get<std::string>();
            continue;
        }
        const auto& keys = numeric_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError("config: unknown key '" + key + "' (allowed: " + allowed_keys() + ")");
        }
        if (!value.is_number()) throw ConfigError("config: " + key + " must be a number");
        raw.values[key] = value.get<double>();
    }
    return raw;
}

model::FridgeParams build_params(const RawParams& raw, bool require_all) {
    auto get = [&](const std::string& key) -> std::optional<double> {
        auto it = raw.values.find(key);
        if (it == raw.values.end()) return std::nullopt;
        return it->second;
    };
    model::FridgeParams p;
    if (require_all) {
        for (const auto& key : required_keys()) {
            if (!get(key)) throw ConfigError("missing required key '" + key + "'");
        }
        const bool has_all_rates = get("pc") && get("pr") && get("ph");
        if (!get("p") && !has_all_rates) throw ConfigError("missing required key 'p' (or all of pc, pr, ph)");
    }
    p.e_c = get("Ec").value_or(p.e_c);
    p.eta = get("eta").value_or(p.eta);
    p.t_c = get("Tc").value_or(p.t_c);
    p.t_r = get("Tr").value_or(p.t_r);
    p.t_h = get("Th").value_or(p.t_h);
    if (auto v = get("p")) p.p_c = p.p_r = p.p_h = *v;
    p.p_c = get("pc").value_or(p.p_c);
    p.p_r = get("pr").value_or(p.p_r);
    p.p_h = get("ph").value_or(p.p_h);
    p.g = get("g").value_or(p.g);
    p.kappa = get("kappa").value_or(0.0);
    try {
        if (raw.subspace) p.coherence = model::coherence_subspace_from_string(*raw.subspace);
        model::validate(p);
    } catch (const ConfigError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
    return p;
}

std::vector<double> grid_from(const std::vector<double>& triple, bool log, const char* flag) {
    if (triple.size() != 3) throw ConfigError(std::string(flag) + " expects three values: start stop count");
    const double n = triple[2];
    if (!(n >= 1.0) || n != std::floor(n)) throw ConfigError(std::string(flag) + ": count must be a positive integer");
    try {
        const auto count = static_cast<std::size_t>(n);
        return log ? analysis::log_grid(triple[0], triple[1], count) : analysis::linear_grid(triple[0], triple[1], count);
    } catch (const InvalidInput& e) {
        throw ConfigError(std::string(flag) + ": " + e.what());
    }
}

void print_steady(std::ostream& out, const steady::SteadyReport& r) {
    out << "r_c = " << format_real(r.populations.r_c) << "\n"
        << "r_r = " << format_real(r.populations.r_r) << "\n"
        << "r_h = " << format_real(r.populations.r_h) << "\n"
        << "q = " << format_real(r.combos.q) << "\n"
        << "delta = " << format_real(r.delta) << "\n"
        << "omega_form = " << steady::to_string(r.omega_form) << "\n"
        << "omega_cr = " << format_real(r.omega_cr) << "\n"
        << "omega_ch = " << format_real(r.omega_ch) << "\n"
        << "omega_rh = " << format_real(r.omega_rh) << "\n"
        << "gamma = " << format_real(r.gamma) << "\n"
        << "Q_c = " << format_real(r.q_cool) << "\n"
        << "eta = " << format_real(r.eta) << "\n"
        << "eta_carnot = " << format_real(r.eta_carnot) << "\n"
        << "is_fridge = " << (r.is_fridge ? "true" : "false") << "\n";
}

void print_qsl(std::ostream& out, const qsl::QslReport& r) {
    out << "tau = " << format_real(r.tau) << "\n"
        << "purity_gap = " << format_real(r.purity_gap) << "\n"
        << "generator_norm = " << format_real(r.generator_norm) << "\n"
        << "chi = " << format_real(r.chi) << "\n"
        << "trivial = " << (r.trivial ? "true" : "false") << "\n";
}

void print_warnings(std::ostream& err, const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) err << "warning: " << w << "\n";
}

std::ofstream open_output(const std::string& path) {
    const std::filesystem::path fs_path(path);
    if (fs_path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(fs_path.parent_path(), ec);
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ComputationError("cannot write '" + path + "'");
    return os;
}

} // namespace

std::string to_string(Command c) {
    switch (c) {
    case Command::steady: return "steady";
    case Command::evolve: return "evolve";
    case Command::qsl: return "qsl";
    case Command::sweep: return "sweep";
    case Command::optimize: return "optimize";
    case Command::verify: return "verify";
    }
    return "?";
}

const std::vector<std::string>& required_keys() {
    static const std::vector<std::string> keys{"Ec", "eta", "Tc", "Tr", "Th", "g"};
    return keys;
}

RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"Three-qubit absorption refrigerator: steady state, speed limit and BSOCR", "qar"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string config_path;
    std::string out_path;
    std::map<std::string, double> flag_values;
    std::string subspace;
    app.add_option("--config", config_path, "JSON file with model parameters");
    app.add_option("--out", out_path, "output CSV path");
    std::map<std::string, CLI::Option*> flag_opts;
    for (const auto& key : numeric_keys()) {
        flag_opts[key] = app.add_option("--" + key, flag_values[key], key)->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }
    auto* subspace_opt = app.add_option("--subspace", subspace, "coherence subspace: none, outer, inner");

    RunConfig cfg;
    auto* steady_cmd = app.add_subcommand("steady", "analytic steady state; writes a one-row CSV");
    auto* qsl_cmd = app.add_subcommand("qsl", "speed-limit time and chi");
    auto* evolve_cmd = app.add_subcommand("evolve", "RK4 trajectory from the initial state; writes a CSV");
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one knob; writes a CSV");
    auto* optimize_cmd = app.add_subcommand("optimize", "maximize chi over eta");
    app.add_subcommand("verify", "run the acceptance checks");

    double t_end = 0.0, dt = 0.0;
    std::size_t stride = 0;
    evolve_cmd->add_option("--t-end", t_end, "horizon (default 50 / min p)");
    evolve_cmd->add_option("--dt", dt, "step bound (default 0.05 / max(E_r, q))");
    evolve_cmd->add_option("--stride", stride, "record every n-th step (default: about 1000 rows)");

    std::string knob;
    std::vector<double> log_spec, lin_spec;
    unsigned threads = 0;
    sweep_cmd->add_option("--knob", knob, "g, p, eta or kappa")->required();
    auto* log_opt = sweep_cmd->add_option("--log", log_spec, "start stop count (log spacing)")->expected(3);
    auto* lin_opt = sweep_cmd->add_option("--lin", lin_spec, "start stop count (linear spacing)")->expected(3);
    log_opt->excludes(lin_opt);
    sweep_cmd->add_option("--threads", threads, "worker threads (default: hardware)");

    double eta_lo = kUnset, eta_hi = kUnset;
    std::size_t opt_grid = 64;
    optimize_cmd->add_option("--eta-lo", eta_lo, "lower end of the eta bracket");
    optimize_cmd->add_option("--eta-hi", eta_hi, "upper end of the eta bracket");
    optimize_cmd->add_option("--grid", opt_grid, "grid points of the initial scan (default 64)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        cfg.help_requested = true;
        cfg.help_text = app.help();
        return cfg;
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    if (steady_cmd->parsed()) cfg.command = Command::steady;
    else if (qsl_cmd->parsed()) cfg.command = Command::qsl;
    else if (evolve_cmd->parsed()) cfg.command = Command::evolve;
    else if (sweep_cmd->parsed()) cfg.command = Command::sweep;
    else if (optimize_cmd->parsed()) cfg.command = Command::optimize;
    else cfg.command = Command::verify;

    RawParams raw;
    if (!config_path.empty()) raw = load_config_file(config_path);
    for (const auto& [key, opt] : flag_opts) {
        if (opt->count() > 0) raw.values[key] = flag_values[key];
    }
    if (subspace_opt->count() > 0) raw.subspace = subspace;
    if (cfg.command == Command::verify) {
        if (!raw.values.empty() || raw.subspace) cfg.params = build_params(raw, false);
    } else {
        cfg.params = build_params(raw, true);
    }
    cfg.out_path = out_path;

    if (cfg.command == Command::evolve) {
        if (evolve_cmd->get_option("--t-end")->count() > 0 && !(t_end > 0.0)) {
            throw ConfigError("t-end must be > 0 (got " + format_real(t_end) + ")");
        }
        if (evolve_cmd->get_option("--dt")->count() > 0 && !(dt > 0.0)) {
            throw ConfigError("dt must be > 0 (got " + format_real(dt) + ")");
        }
        if (evolve_cmd->get_option("--stride")->count() > 0 && stride == 0) throw ConfigError("stride must be >= 1");
        cfg.t_end = t_end;
        cfg.dt = dt;
        cfg.record_stride = stride;
    }
    if (cfg.command == Command::sweep) {
        try {
            cfg.knob = analysis::sweep_knob_from_string(knob);
        } catch (const InvalidInput& e) {
            throw ConfigError(e.what());
        }
        if (log_opt->count() > 0) cfg.grid = grid_from(log_spec, true, "--log");
        else if (lin_opt->count() > 0) cfg.grid = grid_from(lin_spec, false, "--lin");
        else throw ConfigError("sweep requires --log or --lin");
        cfg.threads = threads;
        analysis::SweepSpec spec{cfg.params, cfg.knob, cfg.grid, cfg.threads};
        if (cfg.knob == analysis::SweepKnob::kappa && cfg.params.coherence == model::CoherenceSubspace::none) {
            throw ConfigError("kappa sweep requires subspace outer or inner");
        }
        try {
            analysis::validate(spec);
        } catch (const InvalidInput& e) {
            throw ConfigError(e.what());
        }
    }
    if (cfg.command == Command::optimize) {
        cfg.eta_lo = eta_lo;
        cfg.eta_hi = eta_hi;
        if (opt_grid < 3) throw ConfigError("grid must be >= 3");
        cfg.opt_grid = opt_grid;
    }
    return cfg;
}

std::string output_path(const RunConfig& config) {
    if (!config.out_path.empty()) return config.out_path;
    const char* dir = std::getenv("QAR_OUTPUT_DIR");
    const std::filesystem::path base = (dir != nullptr && *dir != '\0') ? std::filesystem::path(dir) : ".";
    return (base / (to_string(config.command) + ".csv")).string();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.help_requested) {
        out << config.help_text;
        return kExitOk;
    }
    const model::FridgeParams& p = config.params;
    if (config.command != Command::verify) print_warnings(err, model::regime_warnings(p));

    switch (config.command) {
    case Command::steady: {
        const steady::SteadyReport r = steady::steady_state(p);
        print_steady(out, r);
        print_warnings(err, r.warnings);
        const std::string path = output_path(config);
        auto os = open_output(path);
        csv::write_steady(os, p, r);
        out << "wrote " << path << "\n";
        return kExitOk;
    }
    case Command::qsl: {
        const steady::SteadyReport st = steady::steady_state(p);
        const qsl::QslReport r = qsl::qsl_time(p, st);
        print_qsl(out, r);
        print_warnings(err, r.warnings);
        if (!config.out_path.empty()) {
            auto os = open_output(config.out_path);
            csv::write_qsl(os, r);
            out << "wrote " << config.out_path << "\n";
        }
        return kExitOk;
    }
    case Command::evolve: {
        dynamics::EvolveOptions opt;
        opt.t_end = config.t_end > 0.0 ? config.t_end : dynamics::default_horizon(p);
        opt.dt = config.dt > 0.0 ? config.dt : dynamics::max_stable_step(p);
        const auto steps = static_cast<std::size_t>(std::ceil(opt.t_end / opt.dt));
        opt.record_stride = config.record_stride > 0 ? config.record_stride : std::max<std::size_t>(1, steps / 1000);
        const dynamics::Trajectory traj = dynamics::evolve(p, model::initial_state(p), opt);
        const steady::SteadyReport st = steady::steady_state(p);
        const std::string path = output_path(config);
        auto os = open_output(path);
        csv::write_trajectory(os, traj, st.rho_f);
        out << "steps = " << steps << ", dt = " << format_real(traj.step) << ", rows = " << traj.times.size() << "\n"
            << "J_c(t_end) = " << format_real(traj.currents.back()) << "\n"
            << "trace_dist_to_steady(t_end) = " << format_real(linalg::trace_distance(traj.final_state(), st.rho_f))
            << "\n"
            << "wrote " << path << "\n";
        return kExitOk;
    }
    case Command::sweep: {
        const analysis::SweepSpec spec{p, config.knob, config.grid, config.threads};
        const auto records = analysis::run_sweep(spec);
        const std::string path = output_path(config);
        auto os = open_output(path);
        csv::write_sweep(os, records);
        std::size_t failed = 0;
        for (const auto& r : records) failed += r.ok && std::isfinite(r.chi) ? 0 : 1;
        out << "points = " << records.size() << ", without chi = " << failed << "\n"
            << "wrote " << path << "\n";
        return kExitOk;
    }
    case Command::optimize: {
        double lo = config.eta_lo;
        double hi = config.eta_hi;
        if (std::isnan(lo) || std::isnan(hi)) {
            const auto bracket = analysis::default_eta_bracket(p);
            if (std::isnan(lo)) lo = bracket.first;
            if (std::isnan(hi)) hi = bracket.second;
        }
        const analysis::Optimum opt = analysis::maximize_chi_over_eta(p, lo, hi, config.opt_grid);
        out << "eta_star = " << format_real(opt.eta_star) << "\n"
            << "chi_star = " << format_real(opt.chi_star) << "\n"
            << "method = " << analysis::to_string(opt.method) << "\n"
            << "f_value = " << format_real(opt.f_value) << "\n"
            << "eta_carnot = " << format_real(steady::carnot_cop(p.t_c, p.t_r, p.t_h)) << "\n"
            << "bracket = [" << format_real(lo) << ", " << format_real(hi) << "]\n";
        return kExitOk;
    }
    case Command::verify: {
        std::size_t failed = 0;
        for (int id = 1; id <= acceptance::kCriterionCount; ++id) {
            const acceptance::CriterionResult r = acceptance::run_criterion(id);
            out << acceptance::format_line(r) << std::endl;
            failed += r.passed ? 0 : 1;
        }
        out << (acceptance::kCriterionCount - static_cast<int>(failed)) << "/" << acceptance::kCriterionCount
            << " criteria passed\n";
        return failed == 0 ? kExitOk : kExitVerification;
    }
    }
    return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    try {
        return run(parse_config(args), out, err);
    } catch (const InvalidInput& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ComputationError& e) {
        err << "computation error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}

} // namespace qar::cli
