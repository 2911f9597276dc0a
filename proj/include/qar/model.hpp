// model.hpp - Three-qubit absorption refrigerator: parameters, Hamiltonian, initial state

#pragma once

#include <string>
#include <vector>

#include "qar/linalg.hpp"

namespace qar::model {

using linalg::Operator;
using linalg::Operator2;

enum class CoherenceSubspace {
    none,
    outer,   // |000><111| + h.c., matrix element (1,8)
    inner,   // |010><101| + h.c., matrix element (3,6)
};

std::string to_string(CoherenceSubspace s);
CoherenceSubspace coherence_subspace_from_string(const std::string& name);

// Units: hbar = k_B = 1. Qubit energies are derived from (e_c, eta):
// E_h = E_c / eta and E_r = E_c + E_h, so the three-body interaction
// conserves the free energy.
struct FridgeParams {
    double e_c{1.0};
    double eta{0.5};
    double t_c{1.0};
    double t_r{2.0};
    double t_h{10.0};
    double p_c{0.05};
    double p_r{0.05};
    double p_h{0.05};
    double g{0.05};
    double kappa{0.0};
    CoherenceSubspace coherence{CoherenceSubspace::none};

    double e_h() const { return e_c / eta; }
    double e_r() const { return e_c + e_h(); }
    double total_rate() const { return p_c + p_r + p_h; }
    double min_rate() const;
    double max_rate() const;
};

// Throws InvalidInput naming the offending field.
void validate(const FridgeParams& params);

// Non-fatal notes, e.g. leaving the perturbative regime (g or p_i >= 0.1 E_c).
std::vector<std::string> regime_warnings(const FridgeParams& params);

struct ThermalPopulations {
    double r_c{0.5};
    double r_r{0.5};
    double r_h{0.5};

    double rbar_c() const { return 1.0 - r_c; }
    double rbar_r() const { return 1.0 - r_r; }
    double rbar_h() const { return 1.0 - r_h; }
    double at(linalg::Qubit q) const;
};

// Ground-state probability (1 + exp(-E/T))^-1.
double ground_pop(double energy, double temperature);

ThermalPopulations populations(const FridgeParams& params);

Operator2 thermal_qubit(double ground_probability);

Operator free_hamiltonian(const FridgeParams& params);
Operator interaction_hamiltonian(const FridgeParams& params);
Operator build_hamiltonian(const FridgeParams& params);

// tau_c (x) tau_r (x) tau_h.
Operator thermal_product(const FridgeParams& params);

// Real off-diagonal amplitude kappa * sqrt(prod_i r_i rbar_i).
double coherence_amplitude(const FridgeParams& params);

// mu: the coherence added on top of the thermal product (zero for kappa = 0
// or subspace none).
Operator coherence_term(const FridgeParams& params);

// rho_0 = thermal product + mu. Throws ComputationError if the result is
// not positive semidefinite.
Operator initial_state(const FridgeParams& params);

} // namespace qar::model
