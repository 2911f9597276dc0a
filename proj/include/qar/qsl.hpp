// qsl.hpp - Markovian speed limit to the steady state and the BSOCR figure of merit
//
// tau = |tr(rho_i rho_f) - tr(rho_i^2)| / ||L rho_i||_HS for the initial state
// rho_i = rho_0 + mu, and chi = Q_c / tau.

#pragma once

#include <string>
#include <vector>

#include "qar/linalg.hpp"
#include "qar/model.hpp"
#include "qar/steady.hpp"

namespace qar::qsl {

using linalg::Operator;
using model::FridgeParams;
using steady::SteadyReport;

struct QslReport {
    double tau{0.0};
    double purity_gap{0.0};        // |cos(theta) - 1| tr(rho_i^2)
    double generator_norm{0.0};    // ||L rho_i||_HS
    double chi{0.0};               // NaN when tau == 0
    bool trivial{false};           // both the gap and the generator vanish
    std::vector<std::string> warnings;
};

// The generator evaluated on the initial state. For kappa = 0 this is
// -i[H_int, rho_0]; otherwise -i[H, rho_0 + mu] - q mu.
Operator lindblad_adjoint_initial(const FridgeParams& params);

// rho_f is the kappa-independent steady state in `steady`.
// Throws InconsistentSpeedLimit when the generator vanishes on rho_i but the
// purity gap does not.
QslReport qsl_time(const FridgeParams& params, const SteadyReport& steady);
QslReport qsl_time(const FridgeParams& params);

// chi = Q_c / tau, signed like Q_c. Throws UndefinedChi when tau == 0.
double bsocr(const FridgeParams& params);

struct ClosedFormTerms {
    double numerator{0.0};            // rbar_c rbar_h - rbar_r (1 - rbar_c - rbar_h + 2 rbar_c rbar_h) = -Delta
    double numerator_as_printed{0.0}; // same with r_h in the first product
    double denominator{0.0};          // polynomial in rbar_i, equal to tr(rho_0 sigma) at equal rates
};

ClosedFormTerms closed_form_terms(const model::ThermalPopulations& r);

// Equal-rate, kappa = 0 rational form 3 sqrt(2) g p E_c N / |D|.
// Throws InvalidInput for unequal rates or kappa > 0.
double bsocr_closed_equal_p(const FridgeParams& params);

struct CoherentCoeffs {
    // p-form: chi = s 3 p E_c sqrt((N1 p^2 + N2 p + N3) / (D1 p^4 + D2 p^2 + D3))
    double n1{0.0}, n2{0.0}, n3{0.0};
    double d1{0.0}, d2{0.0}, d3{0.0};
    // g-form in u = 1/g: chi = s g E_c sqrt((N'1 u^2 + N'2 u + N'3) / (D'1 u^4 + D'2 u^2 + D'3))
    double n1g{0.0}, n2g{0.0}, n3g{0.0};
    double d1g{0.0}, d2g{0.0}, d3g{0.0};
    double pi1{0.0};      // tr(rho_0 sigma + mu sigma)
    double pi2{0.0};      // tr(rho_0 mu + mu^2)
    double lambda{0.0};   // 2 + sum q_i + sum Q_jk Omega_jk
    double delta{0.0};
    double sign{1.0};     // sign of gamma

    double chi_p_form(double p, double e_c) const;
    double chi_g_form(double g, double e_c) const;
};

// Requires equal reset rates. Throws UndefinedChi when Delta == 0.
CoherentCoeffs bsocr_coherent_coeffs(const FridgeParams& params);

struct TradeoffCoeffs {
    double xi1{0.0};    // -q E_c Delta
    double xi2{0.0};    // |Delta tr(rho_0 sigma) / (sqrt 2 (r_c r_h + r_r (r_c + r_h - 2 r_c r_h - 1)))|
    double ups1{0.0};   // 2 + sum q_i + sum Q_jk Omega_jk
    double ups2{0.0};   // q^2 / 2

    double cooling(double g) const { return xi1 / (ups1 + ups2 / (g * g)); }
    double tau(double g) const { return (xi2 / g) / (ups1 + ups2 / (g * g)); }

    // tau^2 as a function of Q_c, eliminating g.
    double tau_squared_printed(double q_cool) const;
    double tau_squared_exact(double q_cool) const;   // includes the 1/Upsilon_2 factor
};

// Requires kappa = 0. Throws PoleError when Delta == 0.
TradeoffCoeffs tradeoff_coeffs(const FridgeParams& params);

} // namespace qar::qsl
