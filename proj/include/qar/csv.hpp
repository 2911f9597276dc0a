// csv.hpp - CSV serialization of reports, trajectories and sweeps
//
// Every file starts with a header row; reals use 17 significant digits.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qar/analysis.hpp"
#include "qar/dynamics.hpp"
#include "qar/model.hpp"
#include "qar/qsl.hpp"
#include "qar/steady.hpp"

namespace qar::csv {

std::string format_real(double value);
// Quotes fields containing commas, quotes or newlines.
std::string escape(const std::string& field);
std::string join(const std::vector<std::string>& items, const std::string& sep);

// knob_value,Q_c,tau,chi,gamma,delta,is_fridge,warnings
void write_sweep(std::ostream& os, const std::vector<analysis::SweepRecord>& records);

// t,J_c,trace_dist_to_steady,P_bar
void write_trajectory(std::ostream& os, const dynamics::Trajectory& traj, const linalg::Operator& steady_state);

void write_steady(std::ostream& os, const model::FridgeParams& params, const steady::SteadyReport& report);

void write_qsl(std::ostream& os, const qsl::QslReport& report);

} // namespace qar::csv
