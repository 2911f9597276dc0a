#include <doctest.h>

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "qar/acceptance.hpp"
#include "qar/dynamics.hpp"
#include "qar/errors.hpp"
#include "qar/steady.hpp"

using namespace qar;
using namespace qar::dynamics;
using linalg::cplx;

namespace {

Operator hermitian_probe() {
    Operator a;
    for (int i = 0; i < linalg::kDim; ++i) {
        for (int j = 0; j < linalg::kDim; ++j) a(i, j) = cplx(std::cos(0.3 * i * j + 1.0), std::sin(i - 2.0 * j));
    }
    return a + a.adjoint();
}

} // namespace

TEST_SUITE("dynamics") {

TEST_CASE("superoperator matrix agrees with direct application") {
    model::FridgeParams p = acceptance::fig4_params();
    const Operator x = hermitian_probe();
    const Operator direct = liouvillian_apply(p, x);
    const Operator via_matrix = linalg::unvec(liouvillian_matrix(p) * linalg::vec(x));
    CHECK((direct - via_matrix).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(std::abs(direct.trace()) < 1e-13);
}

TEST_CASE("reset part vanishes on the thermal product") {
    model::FridgeParams p;
    const Liouvillian gen(p);
    CHECK(gen.reset_part(model::thermal_product(p)).cwiseAbs().maxCoeff() < 1e-17);
    CHECK(heat_current_cold(p, model::thermal_product(p)) == doctest::Approx(0.0));
}

TEST_CASE("steady heat current equals q gamma Ec") {
    using acceptance::fig1_params, acceptance::fig2_params, acceptance::fig4_params;
    for (const auto& p : {fig1_params(), fig2_params(), fig4_params()}) {
        const steady::SteadyReport st = steady::steady_state(p);
        const double expected = st.combos.q * st.gamma * p.e_c;
        CHECK(heat_current_cold(p, st.rho_f) == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("RK4 error falls by about 16 when the step halves") {
    model::FridgeParams p;
    p.kappa = 1.0;
    p.coherence = model::CoherenceSubspace::outer;
    const double horizon = 2.0;
    const Operator rho0 = model::initial_state(p);
    const Operator exact =
        linalg::unvec((liouvillian_matrix(p) * cplx(horizon, 0.0)).exp() * linalg::vec(rho0));
    const double dt = max_stable_step(p);
    const auto a = evolve(p, rho0, {horizon, dt, 1000000});
    const auto b = evolve(p, rho0, {horizon, dt / 2.0, 1000000});
    CHECK(b.step == doctest::Approx(a.step / 2.0).epsilon(1e-14));
    const double ratio = linalg::hs_norm(a.final_state() - exact) / linalg::hs_norm(b.final_state() - exact);
    CHECK(ratio >= 12.0);
    CHECK(ratio <= 20.0);
}

TEST_CASE("evolve options") {
    model::FridgeParams p;
    const Operator rho0 = model::initial_state(p);
    const double bound = max_stable_step(p);
    CHECK(bound == doctest::Approx(0.05 / 3.0));
    CHECK(default_horizon(p) == doctest::Approx(1000.0));
    CHECK_THROWS_AS(evolve(p, rho0, {1.0, 2.0 * bound, 1}), InvalidInput);
    CHECK_THROWS_AS(evolve(p, rho0, {0.0, bound, 1}), InvalidInput);
    CHECK_THROWS_AS(evolve(p, rho0, {1.0, bound, 0}), InvalidInput);

    const Trajectory t = evolve(p, rho0, {1.0, bound, 7});
    // 60 steps: rows at 0, 7, 14, ..., 56 and the final step.
    CHECK(t.times.size() == 10);
    CHECK(t.times.front() == 0.0);
    CHECK(t.times.back() == doctest::Approx(1.0));
    CHECK(t.currents.size() == t.times.size());
    const auto pbar = avg_transient_power_series(t);
    CHECK(std::isnan(pbar.front()));
    CHECK(pbar.back() == doctest::Approx(avg_transient_power(t)));
}

TEST_CASE("trajectory relaxes to the analytic steady state") {
    model::FridgeParams p = acceptance::fig1_params();
    const Operator target = steady::steady_state(p).rho_f;
    const Trajectory t = evolve(p, model::initial_state(p), {default_horizon(p), max_stable_step(p), 1u << 30});
    CHECK(linalg::trace_distance(t.final_state(), target) < 1e-6);
    CHECK(std::abs(t.final_state().trace() - cplx(1.0, 0.0)) < 1e-12);
}

TEST_CASE("convergence time") {
    model::FridgeParams p;
    const Operator target = steady::steady_state(p).rho_f;
    const double dt = max_stable_step(p);
    CHECK(epsilon_convergence_time(p, target, target, 1e-3, dt, 1.0) == 0.0);
    const double t = epsilon_convergence_time(p, model::initial_state(p), target, 1e-3, dt, default_horizon(p));
    CHECK(t > 0.0);
    CHECK(epsilon_convergence_time(p, model::initial_state(p), target, 1e-3, dt, t / 2.0) < 0.0);
}

}
