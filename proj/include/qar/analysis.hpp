// analysis.hpp - Parameter sweeps, maximization of chi over eta, and the
// high-temperature approximation with its F function

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qar/model.hpp"

namespace qar::analysis {

using model::FridgeParams;

enum class SweepKnob { g, p_equal, eta, kappa };

std::string to_string(SweepKnob knob);
SweepKnob sweep_knob_from_string(const std::string& name);

struct SweepSpec {
    FridgeParams base;
    SweepKnob knob{SweepKnob::g};
    std::vector<double> grid;        // nonempty, strictly monotone
    unsigned threads{0};             // 0 selects std::thread::hardware_concurrency
};

struct SweepRecord {
    double knob_value{0.0};
    double q_cool{0.0};
    double tau{0.0};
    double chi{0.0};
    double gamma{0.0};
    double delta{0.0};
    bool is_fridge{false};
    bool ok{true};                   // false when the point raised an error
    std::vector<std::string> warnings;
};

// n points from a to b inclusive; n == 1 gives {a}.
std::vector<double> linear_grid(double a, double b, std::size_t n);
// n logarithmically spaced points from a to b inclusive (a, b > 0).
std::vector<double> log_grid(double a, double b, std::size_t n);

// Throws InvalidInput for an empty or non-monotone grid or knob values out of
// range (eta must lie in (0, eta_Carnot]).
void validate(const SweepSpec& spec);

FridgeParams apply_knob(const FridgeParams& base, SweepKnob knob, double value);

// Evaluates one point; errors are captured in the record.
SweepRecord evaluate_point(const FridgeParams& params, double knob_value);

// Records come back in grid order regardless of thread count.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

enum class OptimumMethod { golden_section, grid_refine };
std::string to_string(OptimumMethod method);

struct Optimum {
    double eta_star{0.0};
    double chi_star{0.0};
    OptimumMethod method{OptimumMethod::golden_section};
    double f_value{0.0};             // F at eta_star; NaN if undefined
};

struct ScalarMaximum {
    double x{0.0};
    double value{0.0};
    OptimumMethod method{OptimumMethod::golden_section};
};

// Grid scan (endpoints included) followed by golden-section refinement of
// the cell around the best grid point, to |dx| <= tol. Non-finite values
// count as -inf. Ties go to the smaller x. Throws BoundaryMaximum when the
// best grid point is an endpoint.
ScalarMaximum grid_golden_maximize(const std::function<double(double)>& fn, double lo, double hi,
                                   std::size_t grid_points = 64, double tol = 1e-8);

// Requires 0 < lo < hi <= eta_Carnot.
Optimum maximize_chi_over_eta(const FridgeParams& params, double lo, double hi,
                              std::size_t grid_points = 64, double tol = 1e-8);

// Default search bracket [1e-3, 1 - 1e-6] * eta_Carnot.
std::pair<double, double> default_eta_bracket(const FridgeParams& params);

struct HighTVariables {
    double x_c{0.0};   // E_c / T_c
    double x_r{0.0};   // (E_c / T_r)(1 + 1/eta)
    double x_h{0.0};   // E_c / (eta T_h)
};

HighTVariables high_t_variables(double eta, const FridgeParams& params);

// F = x_c x_r (x_c - x_r) / (x_c - x_r + x_h). Throws PoleError on a
// vanishing denominator.
double f_function(double eta, const FridgeParams& params);

// 3 sqrt(2) g p E_c / (3 - F/3). Requires equal rates.
double chi_high_t(double eta, const FridgeParams& params);

// Warns when some x_i exceeds 0.1.
std::vector<std::string> high_t_warnings(double eta, const FridgeParams& params);

struct EtaOptAsymptotic {
    double eta_exact_root{0.0};   // minus branch of the extremal-eta root
    double eta_plus_root{0.0};
    double eta_limit{0.0};        // (T_c/T_r)(1 - sqrt(T_c/T_h))
};

// Requires T_c < T_r < T_h. Throws PoleError when the root's denominator vanishes.
EtaOptAsymptotic eta_opt_asymptotic(double t_c, double t_r, double t_h);

// Numeric argmax of F over [lo, hi] with the same grid + golden search.
ScalarMaximum argmax_f(const FridgeParams& params, double lo, double hi,
                       std::size_t grid_points = 64, double tol = 1e-8);

} // namespace qar::analysis
