// steady.hpp - Analytic steady state of the reset master equation
//
// rho_f = tau_c tau_r tau_h + gamma * sigma_crh, with gamma and sigma built
// from the reset-rate combinations q_i and Q_jk and the bias Delta.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qar/linalg.hpp"
#include "qar/model.hpp"

namespace qar::steady {

using linalg::Operator;
using model::FridgeParams;
using model::ThermalPopulations;

struct ResetCombos {
    double q{0.0};
    double q_c{0.0};
    double q_r{0.0};
    double q_h{0.0};
    double big_q_cr{0.0};
    double big_q_ch{0.0};
    double big_q_rh{0.0};
};

// Throws SingularRates whenever a denominator q - p_i or q - p_j - p_k
// vanishes, i.e. unless every rate is positive.
ResetCombos reset_combos(double p_c, double p_r, double p_h);

// Delta = r_c rbar_r r_h - rbar_c r_r rbar_h. Negative inside the cooling
// window (the |101> population exceeds the |010> population).
double bias_delta(const ThermalPopulations& r);

// Candidate readings of the Omega_jk pair weights, in arbiter order. With
// primed populations r'_c = r_c, r'_r = 1 - r_r, r'_h = r_h:
//   printed:     r'_j (1 - r'_k) + (1 - r'_j) r_k
//   symmetrized: r'_j (1 - r'_k) + (1 - r'_j) r'_k
//   complement:  r'_j r'_k + (1 - r'_j)(1 - r'_k)
enum class OmegaForm { printed, symmetrized, complement };

inline constexpr std::array<OmegaForm, 3> kOmegaForms{OmegaForm::printed, OmegaForm::symmetrized,
                                                      OmegaForm::complement};

// The form the residual arbiter selects for this model; the printed and
// symmetrized readings leave an O(1e-7..1e-4) Liouvillian residual.
inline constexpr OmegaForm kAdoptedOmegaForm = OmegaForm::complement;

std::string to_string(OmegaForm form);

struct PairWeights {
    double cr{0.0};
    double ch{0.0};
    double rh{0.0};
};

PairWeights omega_weights(const ThermalPopulations& r, OmegaForm form);

// 2 + sum_i q_i + sum_{cr,ch,rh} Q_jk Omega_jk (the g-independent part of
// the gamma denominator).
double gamma_denominator_core(const ResetCombos& combos, const PairWeights& omega);

struct GammaResult {
    double value{0.0};
    bool no_coupling{false};   // g == 0: the limit value 0 is returned
};

GammaResult gamma_amplitude(const FridgeParams& params, const ResetCombos& combos,
                            const ThermalPopulations& r, OmegaForm form = kAdoptedOmegaForm);

// sigma_crh. Requires g > 0 (the Y_crh coefficient is q / 2g).
Operator sigma_matrix(const ResetCombos& combos, const ThermalPopulations& r, const FridgeParams& params);

// sigma_crh without the Y_crh term; this is the part seen by any diagonal
// operator, e.g. tr(rho_0 sigma) for a thermal product rho_0.
Operator sigma_diagonal_part(const ResetCombos& combos, const ThermalPopulations& r);

// Z_crh = |010><010| - |101><101| and Y_crh = i|101><010| - i|010><101|.
Operator z_crh();
Operator y_crh();

// Carnot coefficient of performance, the eta at which Delta = 0.
// Requires Tc < Tr < Th.
double carnot_cop(double t_c, double t_r, double t_h);

struct SteadyReport {
    ResetCombos combos;
    ThermalPopulations populations;
    OmegaForm omega_form{kAdoptedOmegaForm};
    double delta{0.0};
    double omega_cr{0.0};
    double omega_ch{0.0};
    double omega_rh{0.0};
    double denominator_core{0.0};   // Upsilon_1 / lambda
    double gamma{0.0};
    Operator rho_0;                  // thermal product (kappa-independent)
    Operator sigma;
    Operator rho_f;
    double q_cool{0.0};
    double eta{0.0};
    double eta_carnot{0.0};          // NaN when two bath temperatures coincide
    bool is_fridge{false};
    bool no_coupling{false};
    std::vector<std::string> warnings;
};

// Requires every p_i > 0. For g == 0 the report carries gamma = 0,
// rho_f = rho_0 and sigma without its Y_crh term.
SteadyReport steady_state(const FridgeParams& params, OmegaForm form = kAdoptedOmegaForm);

struct OmegaArbitration {
    std::array<double, 3> residuals{};   // ||L[rho_f]||_HS per OmegaForm, kOmegaForms order
    OmegaForm adopted{OmegaForm::printed};
    bool any_passed{false};
    bool switched{false};                // adopted != printed

    double residual(OmegaForm form) const { return residuals[static_cast<std::size_t>(form)]; }
    std::string summary() const;
};

inline constexpr double kResidualBound = 1e-10;

// Evaluates each Omega reading against the master equation and adopts the
// first whose steady state satisfies ||L[rho_f]||_HS <= kResidualBound.
OmegaArbitration arbitrate_omega_form(const FridgeParams& params);

} // namespace qar::steady
