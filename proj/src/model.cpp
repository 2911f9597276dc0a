// model.cpp - Three-qubit absorption refrigerator: parameters, Hamiltonian, initial state

#include "qar/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qar::model {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidInput(message);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

std::string to_string(CoherenceSubspace s) {
    switch (s) {
        case CoherenceSubspace::none: return "none";
        case CoherenceSubspace::outer: return "outer";
        case CoherenceSubspace::inner: return "inner";
    }
    return "none";
}

CoherenceSubspace coherence_subspace_from_string(const std::string& name) {
    if (name == "none") return CoherenceSubspace::none;
    if (name == "outer" || name == "18") return CoherenceSubspace::outer;
    if (name == "inner" || name == "36") return CoherenceSubspace::inner;
    throw InvalidInput("subspace: unknown value '" + name + "' (allowed: none, outer, inner)");
}

double FridgeParams::min_rate() const { return std::min({p_c, p_r, p_h}); }
double FridgeParams::max_rate() const { return std::max({p_c, p_r, p_h}); }

void validate(const FridgeParams& p) {
    require(std::isfinite(p.e_c) && p.e_c > 0.0, "Ec must be > 0 (got " + fmt(p.e_c) + ")");
    require(std::isfinite(p.eta) && p.eta > 0.0, "eta must be > 0 (got " + fmt(p.eta) + ")");
    require(std::isfinite(p.t_c) && p.t_c > 0.0, "Tc must be > 0 (got " + fmt(p.t_c) + ")");
    require(std::isfinite(p.t_r) && p.t_r >= p.t_c, "Tr must satisfy Tc <= Tr (got " + fmt(p.t_r) + ")");
    require(std::isfinite(p.t_h) && p.t_h >= p.t_r, "Th must satisfy Tr <= Th (got " + fmt(p.t_h) + ")");
    require(std::isfinite(p.p_c) && p.p_c >= 0.0, "pc must be >= 0 (got " + fmt(p.p_c) + ")");
    require(std::isfinite(p.p_r) && p.p_r >= 0.0, "pr must be >= 0 (got " + fmt(p.p_r) + ")");
    require(std::isfinite(p.p_h) && p.p_h >= 0.0, "ph must be >= 0 (got " + fmt(p.p_h) + ")");
    require(std::isfinite(p.g) && p.g >= 0.0, "g must be >= 0 (got " + fmt(p.g) + ")");
    require(std::isfinite(p.kappa) && p.kappa >= 0.0 && p.kappa <= 1.0,
            "kappa must lie in [0, 1] (got " + fmt(p.kappa) + ")");
    require(p.kappa == 0.0 || p.coherence != CoherenceSubspace::none,
            "subspace must be outer or inner when kappa > 0");
}

std::vector<std::string> regime_warnings(const FridgeParams& p) {
    std::vector<std::string> out;
    if (p.g >= 0.1 * p.e_c) out.push_back("non-perturbative coupling: g >= 0.1 Ec");
    if (p.max_rate() >= 0.1 * p.e_c) out.push_back("non-perturbative reset: max p_i >= 0.1 Ec");
    return out;
}

double ThermalPopulations::at(linalg::Qubit q) const {
    switch (q) {
        case linalg::Qubit::cold: return r_c;
        case linalg::Qubit::room: return r_r;
        case linalg::Qubit::hot: return r_h;
    }
    return r_c;
}

double ground_pop(double energy, double temperature) {
    if (!(energy > 0.0) || !(temperature > 0.0)) {
        throw InvalidInput("ground_pop: energy and temperature must be positive");
    }
    return 1.0 / (1.0 + std::exp(-energy / temperature));
}

ThermalPopulations populations(const FridgeParams& p) {
    return {ground_pop(p.e_c, p.t_c), ground_pop(p.e_r(), p.t_r), ground_pop(p.e_h(), p.t_h)};
}

Operator2 thermal_qubit(double r) {
    Operator2 t = Operator2::Zero();
    t(0, 0) = r;
    t(1, 1) = 1.0 - r;
    return t;
}

Operator free_hamiltonian(const FridgeParams& p) {
    Operator h = Operator::Zero();
    for (int k = 0; k < 8; ++k) {
        h(k, k) = p.e_c * ((k >> 2) & 1) + p.e_r() * ((k >> 1) & 1) + p.e_h() * (k & 1);
    }
    return h;
}

Operator interaction_hamiltonian(const FridgeParams& p) {
    const int s101 = linalg::basis_index(1, 0, 1);
    const int s010 = linalg::basis_index(0, 1, 0);
    return p.g * (linalg::ket_bra(s101, s010) + linalg::ket_bra(s010, s101));
}

Operator build_hamiltonian(const FridgeParams& p) { return free_hamiltonian(p) + interaction_hamiltonian(p); }

Operator thermal_product(const FridgeParams& p) {
    const auto r = populations(p);
    return linalg::tensor3(thermal_qubit(r.r_c), thermal_qubit(r.r_r), thermal_qubit(r.r_h));
}

double coherence_amplitude(const FridgeParams& p) {
    const auto r = populations(p);
    return p.kappa * std::sqrt(r.r_c * r.rbar_c() * r.r_r * r.rbar_r() * r.r_h * r.rbar_h());
}

Operator coherence_term(const FridgeParams& p) {
    if (p.kappa == 0.0 || p.coherence == CoherenceSubspace::none) return Operator::Zero();
    const double a = coherence_amplitude(p);
    int i = 0;
    int j = 7;
    if (p.coherence == CoherenceSubspace::inner) {
        i = linalg::basis_index(0, 1, 0);
        j = linalg::basis_index(1, 0, 1);
    }
    return a * (linalg::ket_bra(i, j) + linalg::ket_bra(j, i));
}

Operator initial_state(const FridgeParams& p) {
    Operator rho = thermal_product(p) + coherence_term(p);
    if (p.kappa > 0.0 && linalg::min_eigenvalue(rho) < -1e-14) {
        throw ComputationError("initial_state: coherence makes the initial state non-positive");
    }
    return rho;
}

} // namespace qar::model
