// steady.cpp - Analytic steady state of the reset master equation

#include "qar/steady.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qar/dynamics.hpp"

namespace qar::steady {

using linalg::basis_index;
using linalg::ket_bra;
using linalg::Operator2;
using linalg::Operator4;
using linalg::Qubit;

ResetCombos reset_combos(double p_c, double p_r, double p_h) {
    if (p_c < 0.0 || p_r < 0.0 || p_h < 0.0) throw InvalidInput("reset_combos: rates must be >= 0");
    ResetCombos c;
    c.q = p_c + p_r + p_h;
    // q - p_j - p_k is the third rate, so every Q_jk needs all three positive.
    if (!(p_c > 0.0 && p_r > 0.0 && p_h > 0.0)) {
        throw SingularRates("reset_combos: all reset rates must be positive (q - p_j - p_k vanishes)");
    }
    c.q_c = p_c / (c.q - p_c);
    c.q_r = p_r / (c.q - p_r);
    c.q_h = p_h / (c.q - p_h);
    c.big_q_cr = (p_c * c.q_r + p_r * c.q_c) / (c.q - p_c - p_r);
    c.big_q_ch = (p_c * c.q_h + p_h * c.q_c) / (c.q - p_c - p_h);
    c.big_q_rh = (p_r * c.q_h + p_h * c.q_r) / (c.q - p_r - p_h);
    return c;
}

double bias_delta(const ThermalPopulations& r) {
    return r.r_c * r.rbar_r() * r.r_h - r.rbar_c() * r.r_r * r.rbar_h();
}

std::string to_string(OmegaForm form) {
    switch (form) {
        case OmegaForm::printed: return "printed";
        case OmegaForm::symmetrized: return "symmetrized";
        case OmegaForm::complement: return "complement";
    }
    return "?";
}

PairWeights omega_weights(const ThermalPopulations& r, OmegaForm form) {
    const double pc = r.r_c;
    const double pr = 1.0 - r.r_r;
    const double ph = r.r_h;
    auto weight = [form](double primed_j, double primed_k, double plain_k) {
        switch (form) {
            case OmegaForm::printed: return primed_j * (1.0 - primed_k) + (1.0 - primed_j) * plain_k;
            case OmegaForm::symmetrized: return primed_j * (1.0 - primed_k) + (1.0 - primed_j) * primed_k;
            case OmegaForm::complement: return primed_j * primed_k + (1.0 - primed_j) * (1.0 - primed_k);
        }
        return 0.0;
    };
    return {weight(pc, pr, r.r_r), weight(pc, ph, r.r_h), weight(pr, ph, r.r_h)};
}

double gamma_denominator_core(const ResetCombos& c, const PairWeights& w) {
    return 2.0 + c.q_c + c.q_r + c.q_h + c.big_q_cr * w.cr + c.big_q_ch * w.ch + c.big_q_rh * w.rh;
}

GammaResult gamma_amplitude(const FridgeParams& params, const ResetCombos& combos,
                            const ThermalPopulations& r, OmegaForm form) {
    if (params.g == 0.0) return {0.0, true};
    const double core = gamma_denominator_core(combos, omega_weights(r, form));
    const double denom = core + combos.q * combos.q / (2.0 * params.g * params.g);
    return {-bias_delta(r) / denom, false};
}

Operator z_crh() {
    return ket_bra(basis_index(0, 1, 0), basis_index(0, 1, 0)) - ket_bra(basis_index(1, 0, 1), basis_index(1, 0, 1));
}

Operator y_crh() {
    const linalg::cplx i{0.0, 1.0};
    return i * ket_bra(basis_index(1, 0, 1), basis_index(0, 1, 0)) -
           i * ket_bra(basis_index(0, 1, 0), basis_index(1, 0, 1));
}

Operator sigma_diagonal_part(const ResetCombos& c, const ThermalPopulations& r) {
    const Operator z = z_crh();
    const Operator2 tau_c = model::thermal_qubit(r.r_c);
    const Operator2 tau_r = model::thermal_qubit(r.r_r);
    const Operator2 tau_h = model::thermal_qubit(r.r_h);

    // Z_jk = tr_i Z_crh; the single-qubit Z_i follow by tracing once more.
    const Operator4 z_rh = linalg::partial_trace(z, Qubit::cold);
    const Operator4 z_ch = linalg::partial_trace(z, Qubit::room);
    const Operator4 z_cr = linalg::partial_trace(z, Qubit::hot);
    const Operator2 z_c = linalg::partial_trace_pair(z_cr, 0);
    const Operator2 z_r = linalg::partial_trace_pair(z_cr, 1);
    const Operator2 z_h = linalg::partial_trace_pair(z_ch, 1);

    Operator s = c.big_q_rh * linalg::tensor3(z_c, tau_r, tau_h);
    s += c.big_q_ch * linalg::tensor3(tau_c, z_r, tau_h);
    s += c.big_q_cr * linalg::tensor3(tau_c, tau_r, z_h);
    s += c.q_c * linalg::embed(tau_c, z_rh, Qubit::cold);
    s += c.q_r * linalg::embed(tau_r, z_ch, Qubit::room);
    s += c.q_h * linalg::embed(tau_h, z_cr, Qubit::hot);
    s += z;
    return s;
}

Operator sigma_matrix(const ResetCombos& c, const ThermalPopulations& r, const FridgeParams& params) {
    if (!(params.g > 0.0)) throw InvalidInput("sigma_matrix: requires g > 0");
    return sigma_diagonal_part(c, r) + (c.q / (2.0 * params.g)) * y_crh();
}

double carnot_cop(double t_c, double t_r, double t_h) {
    if (!(t_c > 0.0) || !(t_c < t_r) || !(t_r < t_h)) {
        throw InvalidInput("carnot_cop: requires 0 < Tc < Tr < Th");
    }
    return (1.0 / t_r - 1.0 / t_h) / (1.0 / t_c - 1.0 / t_r);
}

SteadyReport steady_state(const FridgeParams& params, OmegaForm form) {
    model::validate(params);
    SteadyReport rep;
    rep.combos = reset_combos(params.p_c, params.p_r, params.p_h);
    rep.populations = model::populations(params);
    rep.omega_form = form;
    rep.delta = bias_delta(rep.populations);

    const PairWeights w = omega_weights(rep.populations, form);
    rep.omega_cr = w.cr;
    rep.omega_ch = w.ch;
    rep.omega_rh = w.rh;
    rep.denominator_core = gamma_denominator_core(rep.combos, w);

    const GammaResult gamma = gamma_amplitude(params, rep.combos, rep.populations, form);
    rep.gamma = gamma.value;
    rep.no_coupling = gamma.no_coupling;

    rep.rho_0 = model::thermal_product(params);
    rep.sigma = gamma.no_coupling ? sigma_diagonal_part(rep.combos, rep.populations)
                                  : sigma_matrix(rep.combos, rep.populations, params);
    rep.rho_f = rep.rho_0 + rep.gamma * rep.sigma;
    rep.q_cool = rep.combos.q * rep.gamma * params.e_c;
    rep.eta = params.eta;
    rep.is_fridge = rep.gamma > 0.0;

    if (params.t_c < params.t_r && params.t_r < params.t_h) {
        rep.eta_carnot = carnot_cop(params.t_c, params.t_r, params.t_h);
    } else {
        rep.eta_carnot = std::numeric_limits<double>::quiet_NaN();
        rep.warnings.push_back("coincident bath temperatures: Carnot COP undefined");
    }
    if (rep.no_coupling) rep.warnings.push_back("no coupling: g = 0");
    if (!rep.is_fridge && !rep.no_coupling) rep.warnings.push_back("outside cooling window: gamma <= 0");
    for (auto& w_msg : model::regime_warnings(params)) rep.warnings.push_back(std::move(w_msg));
    return rep;
}

std::string OmegaArbitration::summary() const {
    std::ostringstream os;
    os.precision(3);
    os << "Omega residuals: printed=" << residuals[0] << " symmetrized=" << residuals[1]
       << " complement=" << residuals[2] << "; adopted " << to_string(adopted);
    if (switched) os << " (switched from printed)";
    if (!any_passed) os << " (no reading passed)";
    return os.str();
}

OmegaArbitration arbitrate_omega_form(const FridgeParams& params) {
    const dynamics::Liouvillian generator(params);
    OmegaArbitration out;
    bool found = false;
    for (std::size_t k = 0; k < kOmegaForms.size(); ++k) {
        const SteadyReport rep = steady_state(params, kOmegaForms[k]);
        out.residuals[k] = linalg::hs_norm(generator.apply(rep.rho_f));
        if (!found && out.residuals[k] <= kResidualBound) {
            out.adopted = kOmegaForms[k];
            found = true;
        }
    }
    out.any_passed = found;
    out.switched = found && out.adopted != OmegaForm::printed;
    return out;
}

} // namespace qar::steady
