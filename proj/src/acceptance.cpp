// acceptance.cpp - Executable acceptance checks, one per criterion

#include "qar/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "qar/analysis.hpp"
#include "qar/dynamics.hpp"
#include "qar/errors.hpp"
#include "qar/qsl.hpp"
#include "qar/steady.hpp"

namespace qar::acceptance {

namespace {

using linalg::cplx;
using linalg::Operator;
using model::FridgeParams;

std::string num(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

struct Named {
    const char* name;
    FridgeParams params;
};

std::vector<Named> figure_sets() {
    return {{"fig1", fig1_params()}, {"fig2", fig2_params()}, {"fig3", fig3_params()}, {"fig4", fig4_params()}};
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CriterionResult steady_correctness() {
    CriterionResult r{1, "steady state solves the master equation and matches the null-space oracle", true, ""};
    std::ostringstream os;
    for (const auto& [name, p] : figure_sets()) {
        const steady::OmegaArbitration arb = steady::arbitrate_omega_form(p);
        const steady::SteadyReport st = steady::steady_state(p, arb.adopted);
        const double residual = linalg::hs_norm(dynamics::liouvillian_apply(p, st.rho_f));
        const linalg::NullSpaceResult ns = linalg::null_space_1d(dynamics::liouvillian_matrix(p));
        const double diff = (st.rho_f - ns.state).cwiseAbs().maxCoeff();
        const bool ok = arb.any_passed && residual <= steady::kResidualBound && diff <= 1e-9;
        r.passed = r.passed && ok;
        os << name << ": " << arb.summary() << ", oracle diff " << num(diff) << "; ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult dynamics_convergence() {
    CriterionResult r{2, "RK4 reaches the steady state and converges at fourth order", true, ""};
    std::ostringstream os;
    for (const auto& [name, p] : {Named{"fig2", fig2_params()}, Named{"fig4", fig4_params()}}) {
        const steady::SteadyReport st = steady::steady_state(p);
        dynamics::EvolveOptions opt;
        opt.t_end = dynamics::default_horizon(p);
        opt.dt = dynamics::max_stable_step(p);
        opt.record_stride = 1u << 30;
        const dynamics::Trajectory traj = dynamics::evolve(p, model::initial_state(p), opt);
        const double dist = linalg::trace_distance(traj.final_state(), st.rho_f);
        r.passed = r.passed && dist <= 1e-6;
        os << name << ": D(t=" << num(opt.t_end) << ") = " << num(dist) << "; ";
    }

    // Fixed-horizon order test against the exact propagator, with a fast
    // outer-coherence oscillation so the RK4 error dominates roundoff.
    FridgeParams p = fig2_params();
    p.coherence = model::CoherenceSubspace::outer;
    p.kappa = 1.0;
    const double horizon = 5.0;
    const Operator rho0 = model::initial_state(p);
    const linalg::ComplexMatrix prop = (dynamics::liouvillian_matrix(p) * cplx(horizon, 0.0)).exp();
    const Operator exact = linalg::unvec(prop * linalg::vec(rho0));
    auto error_at = [&](double dt) {
        dynamics::EvolveOptions opt{horizon, dt, 1u << 30};
        return linalg::hs_norm(dynamics::evolve(p, rho0, opt).final_state() - exact);
    };
    const double dt = dynamics::max_stable_step(p);
    const double e1 = error_at(dt);
    const double e2 = error_at(dt / 2.0);
    const double ratio = e1 / e2;
    r.passed = r.passed && ratio >= 12.0 && ratio <= 20.0;
    os << "order test: err(dt) = " << num(e1) << ", err(dt/2) = " << num(e2) << ", ratio " << num(ratio);
    r.detail = os.str();
    return r;
}

CriterionResult exact_linearity() {
    CriterionResult r{3, "chi is linear in g and p and matches the closed form", true, ""};
    const FridgeParams base = fig2_params();

    auto spread = [&](analysis::SweepKnob knob, const std::vector<double>& grid, double& worst_closed) {
        double ref = 0.0;
        double worst = 0.0;
        for (double v : grid) {
            const FridgeParams p = analysis::apply_knob(base, knob, v);
            const double chi = qsl::bsocr(p);
            worst_closed = std::max(worst_closed, rel(chi, qsl::bsocr_closed_equal_p(p)));
            const double slope = chi / v;
            if (ref == 0.0) ref = slope;
            worst = std::max(worst, rel(slope, ref));
        }
        return worst;
    };
    double worst_closed = 0.0;
    const double g_spread = spread(analysis::SweepKnob::g, analysis::log_grid(1e-4, 1e-1, 31), worst_closed);
    const double p_spread = spread(analysis::SweepKnob::p_equal, analysis::log_grid(1e-3, 1e-1, 31), worst_closed);
    for (double eta : {0.1, 0.3, 0.6, 0.75}) {
        FridgeParams p = base;
        p.eta = eta;
        worst_closed = std::max(worst_closed, rel(qsl::bsocr(p), qsl::bsocr_closed_equal_p(p)));
    }
    r.passed = g_spread <= 1e-8 && p_spread <= 1e-8 && worst_closed <= 1e-10;
    r.detail = "chi/g spread " + num(g_spread) + ", chi/p spread " + num(p_spread) + ", closed-form deviation " +
               num(worst_closed);
    return r;
}

CriterionResult tradeoff_identity() {
    CriterionResult r{4, "trade-off identity between tau and Q_c, and monotone (Q_c, 1/tau) curve", true, ""};
    const FridgeParams base = fig1_params();
    const qsl::TradeoffCoeffs tc = qsl::tradeoff_coeffs(base);
    analysis::SweepSpec spec;
    spec.base = base;
    spec.knob = analysis::SweepKnob::g;
    spec.grid = analysis::log_grid(1e-4, 1e-1, 60);
    const auto records = analysis::run_sweep(spec);

    double worst_printed = 0.0;
    double worst_exact = 0.0;
    std::vector<std::pair<double, double>> curve;
    for (const auto& rec : records) {
        const double t2 = rec.tau * rec.tau;
        worst_printed = std::max(worst_printed, std::abs(t2 - tc.tau_squared_printed(rec.q_cool)) / t2);
        worst_exact = std::max(worst_exact, std::abs(t2 - tc.tau_squared_exact(rec.q_cool)) / t2);
        curve.emplace_back(std::abs(rec.q_cool), 1.0 / rec.tau);
    }
    std::sort(curve.begin(), curve.end());
    bool monotone = true;
    for (std::size_t i = 1; i < curve.size(); ++i) monotone = monotone && curve[i].second < curve[i - 1].second;

    r.passed = worst_printed <= 1e-8 && monotone;
    r.detail = "identity residual " + num(worst_printed) + " (with the 1/Upsilon_2 factor: " + num(worst_exact) +
               ", Upsilon_2 = " + num(tc.ups2) + "), 1/tau decreasing in |Q_c|: " + (monotone ? "yes" : "no");
    return r;
}

CriterionResult speed_limit_validity() {
    CriterionResult r{5, "tau bounds the convergence time and P-bar(t) <= chi for t >= tau", true, ""};
    std::ostringstream os;
    for (const auto& [name, p] : figure_sets()) {
        const steady::SteadyReport st = steady::steady_state(p);
        const qsl::QslReport q = qsl::qsl_time(p, st);
        const Operator rho0 = model::initial_state(p);
        const double dt = dynamics::max_stable_step(p);
        const double t_eps = dynamics::epsilon_convergence_time(p, rho0, st.rho_f, 1e-3, dt, dynamics::default_horizon(p));
        const bool bound_ok = t_eps >= 0.0 && q.tau <= t_eps;

        dynamics::EvolveOptions opt;
        opt.t_end = std::max(2.0 * std::max(t_eps, 0.0), 2.0 * q.tau);
        opt.dt = dt;
        opt.record_stride = 4;
        const dynamics::Trajectory traj = dynamics::evolve(p, rho0, opt);
        const std::vector<double> pbar = dynamics::avg_transient_power_series(traj);
        double worst = 0.0;
        for (std::size_t i = 0; i < traj.times.size(); ++i) {
            if (traj.times[i] >= q.tau) worst = std::max(worst, std::abs(pbar[i]) / std::abs(q.chi));
        }
        r.passed = r.passed && bound_ok && worst <= 1.0;
        os << name << ": tau " << num(q.tau) << " vs t_eps " << num(t_eps) << ", max |P|/|chi| " << num(worst) << "; ";
    }
    r.detail = os.str();
    return r;
}

CriterionResult heat_current_consistency() {
    CriterionResult r{6, "steady heat current equals q gamma E_c", true, ""};
    double worst = 0.0;
    for (const auto& [name, p] : figure_sets()) {
        const steady::SteadyReport st = steady::steady_state(p);
        const double expected = st.combos.q * st.gamma * p.e_c;
        worst = std::max(worst, rel(dynamics::heat_current_cold(p, st.rho_f), expected));
    }
    r.passed = worst <= 1e-10;
    r.detail = "max relative deviation " + num(worst);
    return r;
}

CriterionResult coherence_boost() {
    CriterionResult r{7, "outer coherence raises chi monotonically in kappa and beats inner coherence", true, ""};
    const FridgeParams base = fig2_params();
    auto chi = [&](double g, double kappa, model::CoherenceSubspace s) {
        FridgeParams p = base;
        p.g = g;
        p.kappa = kappa;
        p.coherence = kappa > 0.0 ? s : model::CoherenceSubspace::none;
        return qsl::bsocr(p);
    };
    const auto outer = model::CoherenceSubspace::outer;
    const auto inner = model::CoherenceSubspace::inner;
    int kappa_violations = 0;
    int subspace_violations = 0;
    std::string first;
    const auto grid = analysis::log_grid(1e-4, 1e-1, 31);
    for (double g : grid) {
        const double c0 = chi(g, 0.0, outer);
        const double c5 = chi(g, 0.5, outer);
        const double c1 = chi(g, 1.0, outer);
        if (!(c1 > c5 && c5 > c0)) {
            ++kappa_violations;
            if (first.empty()) {
                first = "at g = " + num(g) + ": chi(1) = " + num(c1) + ", chi(0.5) = " + num(c5) + ", chi(0) = " + num(c0);
            }
        }
        if (!(c5 > chi(g, 0.5, inner) && c1 > chi(g, 1.0, inner))) ++subspace_violations;
    }
    r.passed = kappa_violations == 0 && subspace_violations == 0;
    r.detail = "kappa ordering violated at " + std::to_string(kappa_violations) + "/" + std::to_string(grid.size()) +
               " g values" + (first.empty() ? "" : " (first " + first + ")") + "; outer <= inner at " +
               std::to_string(subspace_violations) + " g values";
    return r;
}

CriterionResult theorem_check() {
    CriterionResult r{8, "high-temperature efficiency at maximal chi", false, ""};
    const FridgeParams p = theorem_params();
    const analysis::EtaOptAsymptotic asym = analysis::eta_opt_asymptotic(p.t_c, p.t_r, p.t_h);
    const auto [lo, hi] = analysis::default_eta_bracket(p);
    std::ostringstream os;
    os << "eta_limit " << num(asym.eta_limit) << ", root formula " << num(asym.eta_exact_root) << "; ";

    bool numeric_ok = false;
    try {
        const analysis::Optimum opt = analysis::maximize_chi_over_eta(p, lo, hi);
        const double dev = rel(opt.eta_star, asym.eta_limit);
        numeric_ok = dev <= 0.02;
        os << "full-model eta_star " << num(opt.eta_star) << " (deviation " << num(dev) << "); ";
    } catch (const BoundaryMaximum& e) {
        os << "full model: " << e.what() << "; ";
    }
    bool f_ok = false;
    try {
        const analysis::ScalarMaximum fm = analysis::argmax_f(p, lo, hi);
        const double dev = rel(asym.eta_exact_root, fm.x);
        f_ok = dev <= 1e-4;
        os << "argmax F " << num(fm.x) << " (deviation " << num(dev) << ")";
    } catch (const BoundaryMaximum& e) {
        os << "F: " << e.what();
    }
    r.passed = numeric_ok && f_ok;
    r.detail = os.str();
    return r;
}

CriterionResult carnot_endpoints() {
    CriterionResult r{9, "chi vanishes at the Carnot point with an interior maximum", true, ""};
    const FridgeParams base = fig4_params();
    const double carnot = steady::carnot_cop(base.t_c, base.t_r, base.t_h);
    analysis::SweepSpec spec;
    spec.base = base;
    spec.knob = analysis::SweepKnob::eta;
    spec.grid = analysis::linear_grid(carnot / 1000.0, carnot, 1000);
    const auto records = analysis::run_sweep(spec);

    double chi_max = 0.0;
    for (const auto& rec : records) {
        if (std::isfinite(rec.chi)) chi_max = std::max(chi_max, rec.chi);
    }
    const auto& last = records[records.size() - 2];
    const double ratio = last.chi / chi_max;

    bool interior = false;
    std::ostringstream os;
    try {
        const auto [lo, hi] = analysis::default_eta_bracket(base);
        const analysis::Optimum opt = analysis::maximize_chi_over_eta(base, lo, hi);
        interior = opt.eta_star > lo && opt.eta_star < hi;
        os << "eta_star " << num(opt.eta_star) << ", chi_star " << num(opt.chi_star) << "; ";
    } catch (const BoundaryMaximum& e) {
        os << e.what() << "; ";
    }
    r.passed = interior && ratio < 1e-3;
    os << "chi(eta = " << num(last.knob_value) << ")/chi_max = " << num(ratio) << " (eta_Carnot " << num(carnot) << ")";
    r.detail = os.str();
    return r;
}

CriterionResult generator_plumbing() {
    CriterionResult r{10, "generator on the initial state reduces to the commutator forms", true, ""};
    const cplx minus_i{0.0, -1.0};
    FridgeParams p = fig2_params();
    const Operator rho0 = model::thermal_product(p);
    const double d0 =
        (qsl::lindblad_adjoint_initial(p) - minus_i * linalg::commutator(model::interaction_hamiltonian(p), rho0))
            .cwiseAbs()
            .maxCoeff();
    double d1 = 0.0;
    for (auto s : {model::CoherenceSubspace::outer, model::CoherenceSubspace::inner}) {
        p.kappa = 0.5;
        p.coherence = s;
        const Operator mu = model::coherence_term(p);
        const Operator expected =
            minus_i * linalg::commutator(model::build_hamiltonian(p), rho0 + mu) - p.total_rate() * mu;
        d1 = std::max(d1, (qsl::lindblad_adjoint_initial(p) - expected).cwiseAbs().maxCoeff());
    }
    r.passed = d0 <= 1e-14 && d1 <= 1e-14;
    r.detail = "kappa = 0 deviation " + num(d0) + ", kappa = 0.5 deviation " + num(d1);
    return r;
}

} // namespace

FridgeParams fig1_params() {
    FridgeParams p;
    p.e_c = 1.0;
    p.eta = 1.0;
    p.t_c = 1.0;
    p.t_r = 5.0;
    p.t_h = 10.0;
    p.p_c = p.p_r = p.p_h = 0.1;
    p.g = 0.01;
    return p;
}

FridgeParams fig2_params() {
    FridgeParams p;
    p.p_c = p.p_r = p.p_h = 0.05;
    p.g = 0.01;
    return p;
}

FridgeParams fig3_params() {
    FridgeParams p;
    p.p_c = p.p_r = p.p_h = 0.01;
    p.g = 0.05;
    return p;
}

FridgeParams fig4_params() {
    FridgeParams p;
    p.p_c = 0.01;
    p.p_r = 0.02;
    p.p_h = 0.05;
    p.g = 0.01;
    return p;
}

FridgeParams theorem_params() {
    FridgeParams p;
    p.e_c = 1e-3;
    p.t_c = 1.0;
    p.t_r = 30.0;
    p.t_h = 900.0;
    p.p_c = p.p_r = p.p_h = 1e-3;
    p.g = 1e-4;
    return p;
}

CriterionResult run_criterion(int id) {
    static const std::vector<std::function<CriterionResult()>> checks{
        steady_correctness,   dynamics_convergence, exact_linearity, tradeoff_identity, speed_limit_validity,
        heat_current_consistency, coherence_boost,  theorem_check,   carnot_endpoints,  generator_plumbing};
    if (id < 1 || id > kCriterionCount) {
        throw InvalidInput("criterion must be in 1.." + std::to_string(kCriterionCount));
    }
    try {
        return checks[static_cast<std::size_t>(id - 1)]();
    } catch (const std::exception& e) {
        return {id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()};
    }
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
    return out;
}

std::string format_line(const CriterionResult& r) {
    return std::string(r.passed ? "PASS" : "FAIL") + " C" + std::to_string(r.id) + " " + r.title + " | " + r.detail;
}

} // namespace qar::acceptance
