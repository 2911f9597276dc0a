#include <doctest.h>

#include <cmath>
#include <cstring>

#include "qar/acceptance.hpp"
#include "qar/analysis.hpp"
#include "qar/errors.hpp"
#include "qar/qsl.hpp"
#include "qar/steady.hpp"

using namespace qar;
using namespace qar::analysis;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

// Smallest p in [0.05, 0.1] where kappa = 1 outer coherence stops beating the incoherent start.
double fig3_crossover_p() {
    auto excess = [](double p) {
        model::FridgeParams q;
        q.g = 0.05;
        q.p_c = q.p_r = q.p_h = p;
        const double incoherent = qsl::bsocr(q);
        q.kappa = 1.0;
        q.coherence = model::CoherenceSubspace::outer;
        return qsl::bsocr(q) - incoherent;
    };
    double a = 0.05, b = 0.1;
    for (int i = 0; i < 60; ++i) {
        const double m = 0.5 * (a + b);
        (excess(m) > 0.0 ? a : b) = m;
    }
    return 0.5 * (a + b);
}

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("grids") {
    const auto lin = linear_grid(0.0, 1.0, 5);
    CHECK(lin.size() == 5);
    CHECK(lin[2] == doctest::Approx(0.5));
    CHECK(lin.back() == 1.0);
    const auto lg = log_grid(1e-4, 1e-1, 4);
    CHECK(lg.front() == 1e-4);
    CHECK(lg[1] == doctest::Approx(1e-3));
    CHECK(lg.back() == 1e-1);
    CHECK(linear_grid(0.3, 0.7, 1) == std::vector<double>{0.3});
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), InvalidInput);
    CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), InvalidInput);
}

TEST_CASE("sweep grid validation") {
    SweepSpec spec;
    CHECK_THROWS_AS(validate(spec), InvalidInput);
    spec.grid = {0.1, 0.1};
    CHECK_THROWS_AS(validate(spec), InvalidInput);
    spec.grid = {0.3, 0.2, 0.1};
    CHECK_NOTHROW(validate(spec));
    spec.knob = SweepKnob::eta;
    spec.grid = {0.5, 0.9};
    CHECK_THROWS_AS(validate(spec), InvalidInput);
    CHECK(sweep_knob_from_string("p") == SweepKnob::p_equal);
    CHECK_THROWS_AS(sweep_knob_from_string("Tc"), InvalidInput);
}

TEST_CASE("single-point sweep equals a direct computation") {
    SweepSpec spec;
    spec.base = acceptance::fig2_params();
    spec.knob = SweepKnob::g;
    spec.grid = {0.03};
    const auto rec = run_sweep(spec);
    REQUIRE(rec.size() == 1);
    model::FridgeParams p = spec.base;
    p.g = 0.03;
    CHECK(rec[0].chi == qsl::bsocr(p));
    CHECK(rec[0].q_cool == steady::steady_state(p).q_cool);
    CHECK(rec[0].is_fridge);
    CHECK(rec[0].ok);
}

TEST_CASE("sweeps are ordered and bit-reproducible across thread counts") {
    SweepSpec spec;
    spec.base = acceptance::fig1_params();
    spec.knob = SweepKnob::g;
    spec.grid = log_grid(1e-4, 1e-1, 60);
    spec.threads = 1;
    const auto serial = run_sweep(spec);
    spec.threads = 4;
    const auto parallel = run_sweep(spec);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].knob_value == spec.grid[i]);
        CHECK(same_bits(serial[i].chi, parallel[i].chi));
        CHECK(same_bits(serial[i].tau, parallel[i].tau));
    }
    // Fig. 1 curve: 1/tau falls as |Q_c| grows with g.
    for (std::size_t i = 1; i < serial.size(); ++i) {
        CHECK(std::abs(serial[i].q_cool) > std::abs(serial[i - 1].q_cool));
        CHECK(1.0 / serial[i].tau < 1.0 / serial[i - 1].tau);
    }
}

TEST_CASE("sweep records point errors in-row") {
    SweepSpec spec;
    spec.base = acceptance::fig4_params();
    spec.knob = SweepKnob::eta;
    spec.grid = {0.4, 0.8};
    const auto rec = run_sweep(spec);
    CHECK(std::isfinite(rec[0].chi));
    CHECK(std::isnan(rec[1].chi));
    CHECK_FALSE(rec[1].warnings.empty());
}

TEST_CASE("golden-section maximizer") {
    const auto m = grid_golden_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0);
    CHECK(m.x == doctest::Approx(0.3).epsilon(1e-7));
    CHECK(m.method == OptimumMethod::golden_section);
    CHECK_THROWS_AS(grid_golden_maximize([](double x) { return x; }, 0.0, 1.0), BoundaryMaximum);
    CHECK_THROWS_AS(grid_golden_maximize([](double x) { return x; }, 1.0, 0.0), InvalidInput);
}

TEST_CASE("Fig. 4 optimum") {
    const model::FridgeParams p = acceptance::fig4_params();
    const auto [lo, hi] = default_eta_bracket(p);
    CHECK(hi == doctest::Approx(0.8));
    const Optimum opt = maximize_chi_over_eta(p, lo, hi);
    // Cross-checked against a dense null-space evaluation with a bounded scalar optimizer (0.1910427110).
    CHECK(opt.eta_star == doctest::Approx(0.19104269).epsilon(5e-6));
    CHECK(opt.chi_star == doctest::Approx(1.438867016477e-4).epsilon(1e-9));
    const Optimum fine = maximize_chi_over_eta(p, lo, hi, 256);
    CHECK(std::abs(fine.eta_star - opt.eta_star) <= 1e-6);
    CHECK_THROWS_AS(maximize_chi_over_eta(p, 0.1, 0.9), InvalidInput);
}

TEST_CASE("optimum is invariant under joint rescaling of g and p") {
    model::FridgeParams p = acceptance::fig4_params();
    const auto [lo, hi] = default_eta_bracket(p);
    const Optimum a = maximize_chi_over_eta(p, lo, hi);
    p.g *= 10.0;
    p.p_c *= 10.0;
    p.p_r *= 10.0;
    p.p_h *= 10.0;
    const Optimum b = maximize_chi_over_eta(p, lo, hi);
    CHECK(std::abs(a.eta_star - b.eta_star) <= 1e-8);
    CHECK(b.chi_star == doctest::Approx(100.0 * a.chi_star).epsilon(1e-12));
}

TEST_CASE("Fig. 3 crossover rate") {
    // Independent dense-matrix root: 0.06762608269929714.
    CHECK(fig3_crossover_p() == doctest::Approx(0.0676260826993).epsilon(1e-10));
}

TEST_CASE("extremal-eta root formula") {
    const EtaOptAsymptotic e = eta_opt_asymptotic(1.0, 30.0, 900.0);
    CHECK(e.eta_limit == doctest::Approx(0.032222222222222222).epsilon(1e-15));
    CHECK(e.eta_exact_root == doctest::Approx(0.0356725260131288).epsilon(1e-13));
    CHECK(e.eta_plus_root == doctest::Approx(0.033295721670773326).epsilon(1e-13));
    CHECK_THROWS_AS(eta_opt_asymptotic(30.0, 1.0, 900.0), InvalidInput);
}

TEST_CASE("F function and the high-temperature chi") {
    model::FridgeParams p = acceptance::theorem_params();
    const HighTVariables x = high_t_variables(0.02, p);
    CHECK(x.x_c == doctest::Approx(1e-3));
    CHECK(x.x_r == doctest::Approx(1e-3 / 30.0 * 51.0));
    CHECK(x.x_h == doctest::Approx(1e-3 / 18.0));
    CHECK(f_function(0.02, p) == doctest::Approx(x.x_c * x.x_r * (x.x_c - x.x_r) / (x.x_c - x.x_r + x.x_h)));
    CHECK_THROWS_AS(f_function(1.0 / 30.0, p), PoleError);
    CHECK(high_t_warnings(0.02, p).empty());

    // Small x: chi_highT tends to sqrt2 g p Ec and tracks the full model.
    const double approx = chi_high_t(0.02, p);
    CHECK(approx == doctest::Approx(std::sqrt(2.0) * p.g * p.p_c * p.e_c).epsilon(1e-5));
    model::FridgeParams q = p;
    q.eta = 0.02;
    CHECK(qsl::bsocr(q) == doctest::Approx(approx).epsilon(0.05));
    CHECK_THROWS_AS(chi_high_t(0.02, acceptance::fig4_params()), InvalidInput);
}

TEST_CASE("theorem regime has no interior maximum of F below Carnot") {
    const model::FridgeParams p = acceptance::theorem_params();
    const auto [lo, hi] = default_eta_bracket(p);
    CHECK_THROWS_AS(argmax_f(p, lo, hi), BoundaryMaximum);
}

}
