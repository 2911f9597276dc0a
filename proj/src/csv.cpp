// csv.cpp - CSV serialization of reports, trajectories and sweeps

#include "qar/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace qar::csv {

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

void write_sweep(std::ostream& os, const std::vector<analysis::SweepRecord>& records) {
    os << "knob_value,Q_c,tau,chi,gamma,delta,is_fridge,warnings\n";
    for (const auto& r : records) {
        os << format_real(r.knob_value) << ',' << format_real(r.q_cool) << ',' << format_real(r.tau) << ','
           << format_real(r.chi) << ',' << format_real(r.gamma) << ',' << format_real(r.delta) << ','
           << (r.is_fridge ? 1 : 0) << ',' << escape(join(r.warnings, ";")) << '\n';
    }
}

void write_trajectory(std::ostream& os, const dynamics::Trajectory& traj, const linalg::Operator& steady_state) {
    const std::vector<double> pbar = dynamics::avg_transient_power_series(traj);
    os << "t,J_c,trace_dist_to_steady,P_bar\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        os << format_real(traj.times[i]) << ',' << format_real(traj.currents[i]) << ','
           << format_real(linalg::trace_distance(traj.states[i], steady_state)) << ',' << format_real(pbar[i])
           << '\n';
    }
}

void write_steady(std::ostream& os, const model::FridgeParams& p, const steady::SteadyReport& r) {
    os << "Ec,eta,Tc,Tr,Th,pc,pr,ph,g,kappa,subspace,r_c,r_r,r_h,delta,gamma,Q_c,eta_carnot,is_fridge,omega_form,"
          "warnings\n";
    os << format_real(p.e_c) << ',' << format_real(p.eta) << ',' << format_real(p.t_c) << ','
       << format_real(p.t_r) << ',' << format_real(p.t_h) << ',' << format_real(p.p_c) << ','
       << format_real(p.p_r) << ',' << format_real(p.p_h) << ',' << format_real(p.g) << ','
       << format_real(p.kappa) << ',' << model::to_string(p.coherence) << ','
       << format_real(r.populations.r_c) << ',' << format_real(r.populations.r_r) << ','
       << format_real(r.populations.r_h) << ',' << format_real(r.delta) << ',' << format_real(r.gamma) << ','
       << format_real(r.q_cool) << ',' << format_real(r.eta_carnot) << ',' << (r.is_fridge ? 1 : 0) << ','
       << steady::to_string(r.omega_form) << ',' << escape(join(r.warnings, ";")) << '\n';
}

void write_qsl(std::ostream& os, const qsl::QslReport& r) {
    os << "tau,purity_gap,generator_norm,chi,trivial,warnings\n";
    os << format_real(r.tau) << ',' << format_real(r.purity_gap) << ',' << format_real(r.generator_norm) << ','
       << format_real(r.chi) << ',' << (r.trivial ? 1 : 0) << ',' << escape(join(r.warnings, ";")) << '\n';
}

} // namespace qar::csv
