// dynamics.cpp - Reset master equation in the time domain

#include "qar/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qar::dynamics {

using linalg::cplx;
using linalg::Qubit;

Liouvillian::Liouvillian(const FridgeParams& params)
    : hamiltonian_(model::build_hamiltonian(params)),
      rates_{params.p_c, params.p_r, params.p_h} {
    const auto r = model::populations(params);
    thermal_ = {model::thermal_qubit(r.r_c), model::thermal_qubit(r.r_r), model::thermal_qubit(r.r_h)};
}

Operator Liouvillian::reset_part(const Operator& rho) const {
    Operator out = Operator::Zero();
    for (int i = 0; i < 3; ++i) {
        if (rates_[i] == 0.0) continue;
        const Qubit q = static_cast<Qubit>(i);
        out += rates_[i] * (linalg::embed(thermal_[i], linalg::partial_trace(rho, q), q) - rho);
    }
    return out;
}

Operator Liouvillian::apply(const Operator& rho) const {
    const cplx minus_i{0.0, -1.0};
    Operator out = minus_i * (hamiltonian_ * rho - rho * hamiltonian_);
    out += reset_part(rho);
    return out;
}

ComplexMatrix Liouvillian::matrix() const {
    const Eigen::Index n = linalg::kDim * linalg::kDim;
    ComplexMatrix out(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Operator unit = Operator::Zero();
        unit(k % linalg::kDim, k / linalg::kDim) = 1.0;
        out.col(k) = linalg::vec(apply(unit));
    }
    return out;
}

Operator liouvillian_apply(const FridgeParams& params, const Operator& rho) {
    return Liouvillian(params).apply(rho);
}

ComplexMatrix liouvillian_matrix(const FridgeParams& params) { return Liouvillian(params).matrix(); }

double heat_current_cold(const FridgeParams& params, const Operator& rho) {
    const auto r = model::populations(params);
    const Operator reset =
        linalg::embed(model::thermal_qubit(r.r_c), linalg::partial_trace(rho, Qubit::cold), Qubit::cold) - rho;
    double excited = 0.0;
    for (int k = 4; k < 8; ++k) excited += reset(k, k).real();   // cold bit set
    return params.p_c * params.e_c * excited;
}

double max_stable_step(const FridgeParams& params) {
    return 0.05 / std::max(params.e_r(), params.total_rate());
}

double default_horizon(const FridgeParams& params) {
    const double pmin = params.min_rate();
    if (!(pmin > 0.0)) throw InvalidInput("default_horizon: requires every reset rate > 0");
    return 50.0 / pmin;
}

namespace {

Operator rk4_step(const Liouvillian& gen, const Operator& rho, double h) {
    const Operator k1 = gen.apply(rho);
    const Operator k2 = gen.apply(rho + 0.5 * h * k1);
    const Operator k3 = gen.apply(rho + 0.5 * h * k2);
    const Operator k4 = gen.apply(rho + h * k3);
    return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void check_invariants(const Operator& rho, cplx initial_trace, double t, bool check_positivity) {
    const double trace_drift = std::abs(rho.trace() - initial_trace);
    if (trace_drift > 1e-9) {
        throw IntegrationFailure("evolve: trace drift " + std::to_string(trace_drift) + " at t = " +
                                 std::to_string(t) + "; try a smaller dt");
    }
    const double herm = linalg::hermiticity_residual(rho);
    if (herm > 1e-10) {
        throw IntegrationFailure("evolve: Hermiticity drift " + std::to_string(herm) + " at t = " +
                                 std::to_string(t) + "; try a smaller dt");
    }
    if (check_positivity) {
        const double lmin = linalg::min_eigenvalue(rho);
        if (lmin < -1e-8) {
            throw IntegrationFailure("evolve: negative eigenvalue " + std::to_string(lmin) + " at t = " +
                                     std::to_string(t) + "; try a smaller dt");
        }
    }
}

std::size_t step_count(double t_end, double dt) {
    return static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
}

} // namespace

Trajectory evolve(const FridgeParams& params, const Operator& rho0, const EvolveOptions& opt) {
    model::validate(params);
    if (!(opt.t_end > 0.0)) throw InvalidInput("evolve: t_end must be > 0");
    if (!(opt.dt > 0.0)) throw InvalidInput("evolve: dt must be > 0");
    const double limit = max_stable_step(params);
    if (opt.dt > limit * (1.0 + 1e-12)) {
        throw InvalidInput("evolve: dt = " + std::to_string(opt.dt) + " exceeds the stability bound 0.05/max(E_r, q) = " +
                           std::to_string(limit));
    }
    if (opt.record_stride == 0) throw InvalidInput("evolve: record_stride must be >= 1");

    const Liouvillian gen(params);
    const std::size_t n = std::max<std::size_t>(1, step_count(opt.t_end, opt.dt));
    const double h = opt.t_end / static_cast<double>(n);

    Trajectory traj;
    traj.step = h;
    const std::size_t expected = n / opt.record_stride + 2;
    traj.times.reserve(expected);
    traj.states.reserve(expected);
    traj.currents.reserve(expected);

    Operator rho = rho0;
    traj.times.push_back(0.0);
    traj.states.push_back(rho);
    traj.currents.push_back(heat_current_cold(params, rho));

    for (std::size_t k = 1; k <= n; ++k) {
        rho = rk4_step(gen, rho, h);
        const double t = h * static_cast<double>(k);
        check_invariants(rho, rho0.trace(), t, k % 64 == 0 || k == n);
        if (k % opt.record_stride == 0 || k == n) {
            traj.times.push_back(t);
            traj.states.push_back(rho);
            traj.currents.push_back(heat_current_cold(params, rho));
        }
    }
    return traj;
}

double avg_transient_power(const Trajectory& traj) {
    if (traj.times.empty() || !(traj.times.back() > 0.0)) {
        throw InvalidInput("avg_transient_power: trajectory must end at t > 0");
    }
    return traj.currents.back() / traj.times.back();
}

std::vector<double> avg_transient_power_series(const Trajectory& traj) {
    std::vector<double> out(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out[i] = traj.times[i] > 0.0 ? traj.currents[i] / traj.times[i] : std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

double epsilon_convergence_time(const FridgeParams& params, const Operator& rho0, const Operator& target,
                                double eps, double dt, double t_max) {
    if (!(eps > 0.0) || !(dt > 0.0) || !(t_max > 0.0)) {
        throw InvalidInput("epsilon_convergence_time: eps, dt and t_max must be > 0");
    }
    const Liouvillian gen(params);
    Operator rho = rho0;
    const std::size_t n = step_count(t_max, dt);
    auto within = [&](const Operator& state) {
        // Half the HS norm bounds the trace distance from below.
        if (0.5 * (state - target).norm() > eps) return false;
        return linalg::trace_distance(state, target) <= eps;
    };
    if (within(rho)) return 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        rho = rk4_step(gen, rho, dt);
        if (within(rho)) return dt * static_cast<double>(k);
    }
    return -1.0;
}

} // namespace qar::dynamics
