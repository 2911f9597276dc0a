// analysis.cpp - Parameter sweeps, maximization of chi over eta, high-temperature F

#include "qar/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "qar/errors.hpp"
#include "qar/qsl.hpp"
#include "qar/steady.hpp"

namespace qar::analysis {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double eta_carnot(const FridgeParams& p) {
    if (p.t_c < p.t_r && p.t_r < p.t_h) return steady::carnot_cop(p.t_c, p.t_r, p.t_h);
    return kNaN;
}

bool rates_equal(const FridgeParams& p) {
    const double scale = p.max_rate();
    return p.max_rate() - p.min_rate() <= 1e-12 * scale;
}

double finite_or_floor(double v) { return std::isfinite(v) ? v : -std::numeric_limits<double>::infinity(); }

} // namespace

std::string to_string(SweepKnob knob) {
    switch (knob) {
    case SweepKnob::g: return "g";
    case SweepKnob::p_equal: return "p";
    case SweepKnob::eta: return "eta";
    case SweepKnob::kappa: return "kappa";
    }
    return "?";
}

SweepKnob sweep_knob_from_string(const std::string& name) {
    if (name == "g") return SweepKnob::g;
    if (name == "p" || name == "p_equal") return SweepKnob::p_equal;
    if (name == "eta") return SweepKnob::eta;
    if (name == "kappa") return SweepKnob::kappa;
    throw InvalidInput("knob must be one of g, p, eta, kappa (got '" + name + "')");
}

std::string to_string(OptimumMethod method) {
    return method == OptimumMethod::golden_section ? "golden_section" : "grid_refine";
}

std::vector<double> linear_grid(double a, double b, std::size_t n) {
    if (n == 0) throw InvalidInput("grid size must be at least 1");
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = a;
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.back() = b;
    return out;
}

std::vector<double> log_grid(double a, double b, std::size_t n) {
    if (!(a > 0.0 && b > 0.0)) throw InvalidInput("log grid bounds must be positive");
    std::vector<double> exps = linear_grid(std::log10(a), std::log10(b), n);
    std::vector<double> out(n);
    std::transform(exps.begin(), exps.end(), out.begin(), [](double e) { return std::pow(10.0, e); });
    out.front() = a;
    if (n > 1) out.back() = b;
    return out;
}

void validate(const SweepSpec& spec) {
    if (spec.grid.empty()) throw InvalidInput("sweep grid is empty");
    const bool up = spec.grid.size() < 2 || spec.grid[1] > spec.grid[0];
    for (std::size_t i = 1; i < spec.grid.size(); ++i) {
        const bool ok = up ? spec.grid[i] > spec.grid[i - 1] : spec.grid[i] < spec.grid[i - 1];
        if (!ok) throw InvalidInput("sweep grid must be strictly monotone");
    }
    for (double v : spec.grid) {
        switch (spec.knob) {
        case SweepKnob::g:
            if (!(v >= 0.0)) throw InvalidInput("g grid values must be >= 0");
            break;
        case SweepKnob::p_equal:
            if (!(v > 0.0)) throw InvalidInput("p grid values must be > 0");
            break;
        case SweepKnob::kappa:
            if (!(v >= 0.0 && v <= 1.0)) throw InvalidInput("kappa grid values must lie in [0, 1]");
            break;
        case SweepKnob::eta: {
            const double carnot = eta_carnot(spec.base);
            if (!(v > 0.0)) throw InvalidInput("eta grid values must be > 0");
            if (std::isfinite(carnot) && v > carnot * (1.0 + 1e-12)) {
                std::ostringstream os;
                os.precision(17);
                os << "eta grid value " << v << " exceeds eta_Carnot = " << carnot;
                throw InvalidInput(os.str());
            }
            break;
        }
        }
    }
}

FridgeParams apply_knob(const FridgeParams& base, SweepKnob knob, double value) {
    FridgeParams p = base;
    switch (knob) {
    case SweepKnob::g: p.g = value; break;
    case SweepKnob::p_equal: p.p_c = p.p_r = p.p_h = value; break;
    case SweepKnob::eta: p.eta = value; break;
    case SweepKnob::kappa: p.kappa = value; break;
    }
    return p;
}

SweepRecord evaluate_point(const FridgeParams& params, double knob_value) {
    SweepRecord rec;
    rec.knob_value = knob_value;
    try {
        const steady::SteadyReport st = steady::steady_state(params);
        rec.q_cool = st.q_cool;
        rec.gamma = st.gamma;
        rec.delta = st.delta;
        rec.is_fridge = st.is_fridge;
        rec.warnings = st.warnings;
        const qsl::QslReport q = qsl::qsl_time(params, st);
        rec.tau = q.tau;
        rec.chi = q.chi;
        rec.warnings.insert(rec.warnings.end(), q.warnings.begin(), q.warnings.end());
        if (q.trivial) rec.warnings.push_back("chi undefined: tau = 0");
    } catch (const std::exception& e) {
        rec.ok = false;
        rec.tau = rec.chi = kNaN;
        rec.warnings.push_back(std::string("error: ") + e.what());
    }
    return rec;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
    validate(spec);
    std::vector<SweepRecord> out(spec.grid.size());
    unsigned threads = spec.threads != 0 ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, spec.grid.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < spec.grid.size(); i = next++) {
            out[i] = evaluate_point(apply_knob(spec.base, spec.knob, spec.grid[i]), spec.grid[i]);
        }
    };
    if (threads <= 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

ScalarMaximum grid_golden_maximize(const std::function<double(double)>& fn, double lo, double hi,
                                   std::size_t grid_points, double tol) {
    if (!(lo < hi)) throw InvalidInput("maximization bracket requires lo < hi");
    if (grid_points < 3) throw InvalidInput("maximization grid needs at least 3 points");
    if (!(tol > 0.0)) throw InvalidInput("maximization tolerance must be > 0");

    const std::vector<double> xs = linear_grid(lo, hi, grid_points);
    std::vector<double> fs(xs.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fs[i] = finite_or_floor(fn(xs[i]));
        if (fs[i] > fs[best]) best = i;
    }
    if (!std::isfinite(fs[best])) throw ComputationError("maximization: no finite values on the grid");
    if (best == 0 || best + 1 == xs.size()) {
        std::ostringstream os;
        os.precision(10);
        os << "no interior maximum on [" << lo << ", " << hi << "]: grid maximum " << fs[best] << " at "
           << (best == 0 ? "lower" : "upper") << " end x = " << xs[best] << " (values at ends " << fs.front()
           << ", " << fs.back() << ")";
        throw BoundaryMaximum(os.str());
    }

    double a = xs[best - 1];
    double b = xs[best + 1];
    if (b - a <= tol) return {xs[best], fs[best], OptimumMethod::grid_refine};

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = finite_or_floor(fn(c));
    double fd = finite_or_floor(fn(d));
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = finite_or_floor(fn(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = finite_or_floor(fn(d));
        }
    }
    ScalarMaximum m;
    m.x = fc >= fd ? c : d;
    m.value = std::max(fc, fd);
    if (fs[best] > m.value) {
        m.x = xs[best];
        m.value = fs[best];
    }
    m.method = OptimumMethod::golden_section;
    return m;
}

Optimum maximize_chi_over_eta(const FridgeParams& params, double lo, double hi, std::size_t grid_points,
                              double tol) {
    model::validate(params);
    const double carnot = eta_carnot(params);
    if (!(lo > 0.0)) throw InvalidInput("eta bracket lower end must be > 0");
    if (std::isfinite(carnot) && hi > carnot) throw InvalidInput("eta bracket must lie inside (0, eta_Carnot]");

    auto chi_at = [&](double eta) {
        FridgeParams p = params;
        p.eta = eta;
        try {
            return qsl::qsl_time(p).chi;
        } catch (const ComputationError&) {
            return kNaN;
        }
    };
    const ScalarMaximum m = grid_golden_maximize(chi_at, lo, hi, grid_points, tol);

    Optimum opt;
    opt.eta_star = m.x;
    opt.chi_star = m.value;
    opt.method = m.method;
    try {
        opt.f_value = f_function(m.x, params);
    } catch (const ComputationError&) {
        opt.f_value = kNaN;
    }
    return opt;
}

std::pair<double, double> default_eta_bracket(const FridgeParams& params) {
    const double carnot = eta_carnot(params);
    if (!std::isfinite(carnot)) throw InvalidInput("default eta bracket requires Tc < Tr < Th");
    return {1e-3 * carnot, (1.0 - 1e-6) * carnot};
}

HighTVariables high_t_variables(double eta, const FridgeParams& p) {
    if (!(eta > 0.0)) throw InvalidInput("eta must be > 0");
    return {p.e_c / p.t_c, (p.e_c / p.t_r) * (1.0 + 1.0 / eta), p.e_c / (eta * p.t_h)};
}

double f_function(double eta, const FridgeParams& params) {
    const HighTVariables x = high_t_variables(eta, params);
    const double den = x.x_c - x.x_r + x.x_h;
    const double scale = std::max({x.x_c, x.x_r, x.x_h});
    if (std::abs(den) <= 1e-14 * scale) throw PoleError("f_function: x_c - x_r + x_h vanishes (Carnot point)");
    return x.x_c * x.x_r * (x.x_c - x.x_r) / den;
}

double chi_high_t(double eta, const FridgeParams& params) {
    if (!rates_equal(params)) throw InvalidInput("chi_high_t: requires p_c = p_r = p_h");
    const double f = f_function(eta, params);
    return 3.0 * std::sqrt(2.0) * params.g * params.p_c * params.e_c / (3.0 - f / 3.0);
}

std::vector<std::string> high_t_warnings(double eta, const FridgeParams& params) {
    const HighTVariables x = high_t_variables(eta, params);
    std::vector<std::string> w;
    if (std::max({x.x_c, x.x_r, x.x_h}) > 0.1) w.push_back("outside the high-temperature regime: some x_i > 0.1");
    return w;
}

EtaOptAsymptotic eta_opt_asymptotic(double t_c, double t_r, double t_h) {
    if (!(t_c > 0.0 && t_c < t_r && t_r < t_h)) throw InvalidInput("eta_opt_asymptotic: requires 0 < Tc < Tr < Th");
    const double c2 = t_c * t_c;
    const double base = -c2 * t_r + c2 * t_h - t_c * t_r * t_h;
    const double root = std::sqrt(c2 * c2 * t_r * t_r + c2 * t_c * t_r * t_r * t_h);
    const double den = 2.0 * c2 * t_r - t_c * t_r * t_r - c2 * t_h + 2.0 * t_c * t_r * t_h - t_r * t_r * t_h;
    if (den == 0.0) throw PoleError("eta_opt_asymptotic: denominator vanishes");
    EtaOptAsymptotic out;
    out.eta_exact_root = (base - root) / den;
    out.eta_plus_root = (base + root) / den;
    out.eta_limit = (t_c / t_r) * (1.0 - std::sqrt(t_c / t_h));
    return out;
}

ScalarMaximum argmax_f(const FridgeParams& params, double lo, double hi, std::size_t grid_points, double tol) {
    auto f_at = [&](double eta) {
        try {
            return f_function(eta, params);
        } catch (const ComputationError&) {
            return kNaN;
        }
    };
    return grid_golden_maximize(f_at, lo, hi, grid_points, tol);
}

} // namespace qar::analysis
