// dynamics.hpp - Reset master equation in the time domain
//
//   d rho / dt = -i[H, rho] + sum_i p_i (tau_i (x) tr_i rho - rho)

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "qar/linalg.hpp"
#include "qar/model.hpp"

namespace qar::dynamics {

using linalg::ComplexMatrix;
using linalg::Operator;
using linalg::Operator2;
using model::FridgeParams;

// Right-hand side of the master equation with the Hamiltonian and thermal
// factors precomputed; cheap to copy and safe to share between threads.
class Liouvillian {
public:
    explicit Liouvillian(const FridgeParams& params);

    Operator apply(const Operator& rho) const;

    // Only the dissipative part sum_i p_i (tau_i (x) tr_i rho - rho).
    Operator reset_part(const Operator& rho) const;

    // 64x64 superoperator acting on column-stacked vec(rho).
    ComplexMatrix matrix() const;

    const Operator& hamiltonian() const { return hamiltonian_; }

private:
    Operator hamiltonian_;
    std::array<Operator2, 3> thermal_;
    std::array<double, 3> rates_;
};

Operator liouvillian_apply(const FridgeParams& params, const Operator& rho);
ComplexMatrix liouvillian_matrix(const FridgeParams& params);

// Energy flow into the cold qubit through its reset channel:
// J_c = p_c tr[(E_c |1><1|_c (x) I) (tau_c (x) tr_c rho - rho)].
double heat_current_cold(const FridgeParams& params, const Operator& rho);

struct EvolveOptions {
    double t_end{0.0};
    double dt{0.0};                  // upper bound; the step is t_end / ceil(t_end / dt)
    std::size_t record_stride{1};    // keep every n-th step (first and last always kept)
};

struct Trajectory {
    std::vector<double> times;
    std::vector<Operator> states;
    std::vector<double> currents;    // J_c at each recorded time
    double step{0.0};                // the step actually used

    const Operator& final_state() const { return states.back(); }
};

// Largest step accepted by evolve: 0.05 / max(E_r, q).
double max_stable_step(const FridgeParams& params);

// Default horizon 50 / min_i p_i.
double default_horizon(const FridgeParams& params);

// Classical fixed-step RK4. Throws IntegrationFailure when trace drift
// exceeds 1e-9, Hermiticity drift 1e-10, or the smallest eigenvalue falls
// below -1e-8 (positivity is sampled every 64 steps and at the end).
Trajectory evolve(const FridgeParams& params, const Operator& rho0, const EvolveOptions& options);

// P-bar(t_end) = J_c(t_end) / t_end, the time average of dJ_c/dt from a
// start with J_c(0) = 0.
double avg_transient_power(const Trajectory& traj);

// P-bar at each recorded time; NaN at t = 0.
std::vector<double> avg_transient_power_series(const Trajectory& traj);

// First time the trajectory from rho0 comes within trace distance eps of
// `target`, evolving with RK4 at the given step up to t_max. Returns a
// negative value if it never does.
double epsilon_convergence_time(const FridgeParams& params, const Operator& rho0, const Operator& target,
                                double eps, double dt, double t_max);

} // namespace qar::dynamics
