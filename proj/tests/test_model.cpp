#include <doctest.h>

#include <cmath>
#include <string>

#include "qar/errors.hpp"
#include "qar/model.hpp"

using namespace qar;
using namespace qar::model;

namespace {

std::string message_of(const FridgeParams& p) {
    try {
        validate(p);
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("ground population") {
    CHECK(ground_pop(1.0, 1.0) == doctest::Approx(0.7310585786300049).epsilon(1e-15));
    CHECK(ground_pop(2.0, 1e9) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK_THROWS_AS(ground_pop(1.0, 0.0), InvalidInput);
}

TEST_CASE("energies follow from Ec and eta") {
    FridgeParams p;
    p.e_c = 1.0;
    p.eta = 0.5;
    CHECK(p.e_h() == 2.0);
    CHECK(p.e_r() == 3.0);
}

TEST_CASE("validation names the offending key") {
    FridgeParams p;
    p.t_c = -1.0;
    CHECK(message_of(p).find("Tc") == 0);
    p = FridgeParams{};
    p.t_r = 0.5;
    CHECK(message_of(p).find("Tr") == 0);
    p = FridgeParams{};
    p.kappa = 0.5;
    CHECK(message_of(p).find("subspace") == 0);
    p = FridgeParams{};
    p.kappa = 1.5;
    p.coherence = CoherenceSubspace::outer;
    CHECK(message_of(p).find("kappa") == 0);
    CHECK(message_of(FridgeParams{}).empty());
}

TEST_CASE("regime warnings") {
    FridgeParams p;
    CHECK(regime_warnings(p).empty());
    p.g = 0.2;
    CHECK(regime_warnings(p).size() == 1);
}

TEST_CASE("Hamiltonian layout") {
    FridgeParams p;   // Ec = 1, E_h = 2, E_r = 3
    const Operator h = build_hamiltonian(p);
    CHECK(h(0, 0).real() == 0.0);
    CHECK(h(5, 5).real() == doctest::Approx(3.0));   // |101>: Ec + Eh
    CHECK(h(2, 2).real() == doctest::Approx(3.0));   // |010>: Er
    CHECK(h(7, 7).real() == doctest::Approx(6.0));
    CHECK(h(2, 5).real() == p.g);
    CHECK(h(5, 2).real() == p.g);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("thermal product is diagonal with product populations") {
    FridgeParams p;
    const auto r = populations(p);
    const Operator rho = thermal_product(p);
    CHECK(std::abs(rho.trace() - linalg::cplx(1.0, 0.0)) < 1e-15);
    CHECK(rho(2, 2).real() == doctest::Approx(r.r_c * r.rbar_r() * r.r_h).epsilon(1e-15));
    CHECK(rho(5, 5).real() == doctest::Approx(r.rbar_c() * r.r_r * r.rbar_h()).epsilon(1e-15));
    CHECK(r.r_c == doctest::Approx(ground_pop(1.0, 1.0)));
    CHECK(r.r_r == doctest::Approx(ground_pop(3.0, 2.0)));
}

TEST_CASE("coherence placement and amplitude") {
    FridgeParams p;
    p.kappa = 1.0;
    p.coherence = CoherenceSubspace::outer;
    const auto r = populations(p);
    const double amp = std::sqrt(r.r_c * r.rbar_c() * r.r_r * r.rbar_r() * r.r_h * r.rbar_h());
    CHECK(coherence_amplitude(p) == doctest::Approx(amp).epsilon(1e-15));
    const Operator mu = coherence_term(p);
    CHECK(mu(0, 7).real() == doctest::Approx(amp));
    CHECK(mu(7, 0).real() == doctest::Approx(amp));
    CHECK(mu.cwiseAbs().sum() == doctest::Approx(2.0 * amp));

    p.coherence = CoherenceSubspace::inner;
    CHECK(coherence_term(p)(2, 5).real() == doctest::Approx(amp));
    for (auto s : {CoherenceSubspace::outer, CoherenceSubspace::inner}) {
        p.coherence = s;
        CHECK(linalg::min_eigenvalue(initial_state(p)) > -1e-14);
    }
    p.kappa = 0.0;
    CHECK(coherence_term(p).isZero());
}

TEST_CASE("subspace names") {
    CHECK(coherence_subspace_from_string("18") == CoherenceSubspace::outer);
    CHECK(coherence_subspace_from_string("inner") == CoherenceSubspace::inner);
    CHECK(to_string(CoherenceSubspace::none) == "none");
    CHECK_THROWS_AS(coherence_subspace_from_string("middle"), InvalidInput);
}

}
