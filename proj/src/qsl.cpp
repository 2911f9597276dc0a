// qsl.cpp - Markovian speed limit to the steady state and the BSOCR figure of merit

#include "qar/qsl.hpp"

#include <cmath>
#include <limits>

#include "qar/dynamics.hpp"

namespace qar::qsl {

using linalg::cplx;

namespace {

bool rates_equal(const FridgeParams& p) {
    const double scale = std::max({p.p_c, p.p_r, p.p_h});
    return std::abs(p.p_c - p.p_r) <= 1e-12 * scale && std::abs(p.p_c - p.p_h) <= 1e-12 * scale;
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

} // namespace

Operator lindblad_adjoint_initial(const FridgeParams& params) {
    return dynamics::liouvillian_apply(params, model::initial_state(params));
}

QslReport qsl_time(const FridgeParams& params, const SteadyReport& steady) {
    const Operator rho_i = model::initial_state(params);
    const Operator generated = dynamics::liouvillian_apply(params, rho_i);

    QslReport rep;
    const double purity = linalg::trace_product(rho_i, rho_i).real();
    // rho_f - rho_i = gamma sigma - mu, formed directly to avoid cancelling O(1) purities.
    const Operator step = steady.gamma * steady.sigma - model::coherence_term(params);
    rep.purity_gap = std::abs(linalg::trace_product(rho_i, step).real());
    rep.generator_norm = linalg::hs_norm(generated);

    const double norm_floor = 1e-14 * (params.g + params.total_rate());
    const double gap_floor = 1e-12 * purity;
    if (rep.generator_norm <= norm_floor) {
        if (rep.purity_gap > gap_floor) {
            throw InconsistentSpeedLimit("qsl_time: generator vanishes on the initial state but the purity gap is " +
                                         std::to_string(rep.purity_gap));
        }
        rep.tau = 0.0;
        rep.trivial = true;
        rep.chi = std::numeric_limits<double>::quiet_NaN();
        rep.warnings.push_back("trivial evolution: initial state is stationary");
        return rep;
    }
    rep.tau = rep.purity_gap / rep.generator_norm;
    rep.chi = rep.tau > 0.0 ? steady.q_cool / rep.tau : std::numeric_limits<double>::quiet_NaN();
    if (!steady.is_fridge) rep.warnings.push_back("outside cooling window: chi carries the sign of Q_c");
    return rep;
}

QslReport qsl_time(const FridgeParams& params) { return qsl_time(params, steady::steady_state(params)); }

double bsocr(const FridgeParams& params) {
    const SteadyReport st = steady::steady_state(params);
    const QslReport rep = qsl_time(params, st);
    if (!(rep.tau > 0.0)) throw UndefinedChi("bsocr: speed-limit time is zero, chi is undefined");
    return st.q_cool / rep.tau;
}

ClosedFormTerms closed_form_terms(const model::ThermalPopulations& r) {
    const double c = r.rbar_c();
    const double rr = r.rbar_r();
    const double h = r.rbar_h();
    ClosedFormTerms t;
    const double tail = rr * (1.0 - c - h + 2.0 * c * h);
    t.numerator = c * h - tail;
    t.numerator_as_printed = c * r.r_h - tail;
    t.denominator = 1.5 - 3.0 * h + rr * (-1.0 + 3.0 * h + h * h) + rr * rr * (5.0 - 9.0 * h + 4.0 * h * h) +
                    c * c * (rr + rr * rr * (4.0 - 8.0 * h) + 8.0 * rr * h * h - h * (1.0 + 4.0 * h)) -
                    c * (3.0 - 5.0 * h + h * h + 6.0 * rr * h - 3.0 * rr + rr * rr * (9.0 - 16.0 * h + 8.0 * h * h));
    return t;
}

double bsocr_closed_equal_p(const FridgeParams& params) {
    model::validate(params);
    if (!rates_equal(params)) throw InvalidInput("bsocr_closed_equal_p: requires p_c = p_r = p_h");
    if (params.kappa != 0.0) throw InvalidInput("bsocr_closed_equal_p: requires kappa = 0");
    const ClosedFormTerms t = closed_form_terms(model::populations(params));
    if (t.denominator == 0.0) throw UndefinedChi("bsocr_closed_equal_p: tr(rho_0 sigma) vanishes");
    return 3.0 * std::sqrt(2.0) * params.g * params.p_c * params.e_c * t.numerator / std::abs(t.denominator);
}

double CoherentCoeffs::chi_p_form(double p, double e_c) const {
    const double num = n1 * p * p + n2 * p + n3;
    const double den = d1 * std::pow(p, 4) + d2 * p * p + d3;
    return sign * 3.0 * p * e_c * std::sqrt(num / den);
}

double CoherentCoeffs::chi_g_form(double g, double e_c) const {
    const double u = 1.0 / g;
    const double num = n1g * u * u + n2g * u + n3g;
    const double den = d1g * std::pow(u, 4) + d2g * u * u + d3g;
    return sign * g * e_c * std::sqrt(num / den);
}

CoherentCoeffs bsocr_coherent_coeffs(const FridgeParams& params) {
    model::validate(params);
    if (!rates_equal(params)) throw InvalidInput("bsocr_coherent_coeffs: requires p_c = p_r = p_h");
    if (!(params.g > 0.0)) throw InvalidInput("bsocr_coherent_coeffs: requires g > 0");

    const SteadyReport st = steady::steady_state(params);
    if (st.delta == 0.0) throw UndefinedChi("bsocr_coherent_coeffs: Delta vanishes");

    const Operator mu = model::coherence_term(params);
    const Operator rho0 = st.rho_0;
    const Operator rho_i = rho0 + mu;
    const Operator h = model::build_hamiltonian(params);
    const Operator h0 = model::free_hamiltonian(params);
    const Operator v = model::interaction_hamiltonian(params) / params.g;
    const cplx minus_i{0.0, -1.0};

    CoherentCoeffs c;
    c.delta = st.delta;
    c.lambda = st.denominator_core;
    c.sign = sign_of(st.gamma);
    c.pi1 = (linalg::trace_product(rho0, st.sigma) + linalg::trace_product(mu, st.sigma)).real();
    c.pi2 = (linalg::trace_product(rho0, mu) + linalg::trace_product(mu, mu)).real();

    const double g2 = params.g * params.g;
    const double shifted = c.pi1 + c.lambda * c.pi2 / c.delta;

    const Operator m = minus_i * linalg::commutator(h, rho_i);
    c.n1 = 9.0 * linalg::hs_inner(mu, mu).real();
    c.n2 = -6.0 * linalg::hs_inner(m, mu).real();
    c.n3 = linalg::hs_inner(m, m).real();
    c.d1 = 81.0 * c.pi2 * c.pi2 / (4.0 * g2 * g2 * c.delta * c.delta);
    c.d2 = 18.0 * shifted * c.pi2 / (2.0 * g2 * c.delta);
    c.d3 = shifted * shifted;

    const double q = st.combos.q;
    const Operator a = minus_i * linalg::commutator(h0, mu) - q * mu;
    const Operator b = minus_i * linalg::commutator(v, rho_i);
    const double c0 = q * q * c.pi2 / (2.0 * c.delta);
    c.n1g = q * q * linalg::hs_inner(a, a).real();
    c.n2g = 2.0 * q * q * linalg::hs_inner(a, b).real();
    c.n3g = q * q * linalg::hs_inner(b, b).real();
    c.d1g = c0 * c0;
    c.d2g = 2.0 * shifted * c0;
    c.d3g = shifted * shifted;
    return c;
}

double TradeoffCoeffs::tau_squared_printed(double q_cool) const {
    const double k = xi2 * xi2;
    return (k / xi1) * q_cool - ups1 * (k / (xi1 * xi1)) * q_cool * q_cool;
}

double TradeoffCoeffs::tau_squared_exact(double q_cool) const { return tau_squared_printed(q_cool) / ups2; }

TradeoffCoeffs tradeoff_coeffs(const FridgeParams& params) {
    model::validate(params);
    if (params.kappa != 0.0) throw InvalidInput("tradeoff_coeffs: requires kappa = 0");
    const auto combos = steady::reset_combos(params.p_c, params.p_r, params.p_h);
    const auto r = model::populations(params);
    const double delta = steady::bias_delta(r);

    // r1 r3 + r2 (r1 + r3 - 2 r1 r3 - 1) with 1, 2, 3 -> c, r, h.
    const double pole = r.r_c * r.r_h + r.r_r * (r.r_c + r.r_h - 2.0 * r.r_c * r.r_h - 1.0);
    if (std::abs(pole) <= 1e-14 * (r.r_c * r.r_h + r.r_r)) throw PoleError("tradeoff_coeffs: Delta vanishes, xi_2 is undefined");

    const double overlap =
        linalg::trace_product(model::thermal_product(params), steady::sigma_diagonal_part(combos, r)).real();

    TradeoffCoeffs t;
    t.xi1 = -combos.q * params.e_c * delta;
    t.xi2 = std::abs(delta * overlap / (std::sqrt(2.0) * pole));
    t.ups1 = steady::gamma_denominator_core(combos, steady::omega_weights(r, steady::kAdoptedOmegaForm));
    t.ups2 = combos.q * combos.q / 2.0;
    return t;
}

} // namespace qar::qsl
