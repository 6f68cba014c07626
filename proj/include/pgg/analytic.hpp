#pragma once

#include <string>
#include <vector>

#include "pgg/log_value.hpp"

namespace pgg::analytic {

// Constants of the explicit zero-density / zero-free toolbox. alpha is the
// per-application exponent split; the rest are fixed by the estimates in use.
struct Params {
    double c0 = 1.0 / 53.989; // zero-free region constant
    double A = 8.0 / 3.0;     // zero-density exponent
    double c1 = 2.375;        // zero-density leading constant
    double H0 = 3e12;         // height below which all zeros are on the critical line
    double alpha = 0.249;
};

Params graphic_params(); // alpha = 0.249
Params dpg_params();     // alpha = 1/13

void validate_params(const Params& p);

// eta(t) = c0 / ((log t)^{2/3} (log log t)^{1/3}); strictly decreasing, t > e.
double zero_free_eta(double t, double c0 = 1.0 / 53.989);
// same quantity from log t, for arguments far beyond double range
double zero_free_eta_from_log(double log_t, double c0 = 1.0 / 53.989);

// N(sigma, T) bounds for 3/5 <= sigma <= 1 and T > H0: the two-term estimate
// and the one-term form that absorbs the log^2 tail into the leading constant.
struct ZeroDensityBound {
    LogValue two_term;
    LogValue one_term;
};
ZeroDensityBound zero_density_bound(double sigma, double T, const Params& params = {});

// C(A, alpha, c1) = 4 * 1836 * (c1 / (A alpha)) * (2/A - alpha)^4
double integral_bound_constant(const Params& params);

struct BoundResult {
    LogValue value;
    bool hypotheses_ok = true;
    std::vector<std::string> violated; // failed hypotheses; value is then extrapolated
};

// S_N(x) bound: M log x + 8.7 C x^{1 - A alpha eta(4 x log^2 x / N)} log^4 x.
// Flags x < exp(4e3) and N < 8 x^{1/4+alpha} log^3 x; alpha outside (0, 3/4)
// is a hard error.
BoundResult large_gap_sum_bound(const LogValue& x, const LogValue& N, const Params& params,
                                const LogValue& max_gap);

// First-moment bound: max_gap + 8.1 I / (delta^2 x^2). Flags x < exp(1e3) and
// 4 delta x <= 8 log^2 x.
BoundResult first_moment_bound(const LogValue& x, double delta, const LogValue& integral_value,
                               const LogValue& max_gap);

// Integral bound: C delta^2 x^{3 - A alpha eta(T)} log^4 x. T outside
// (10, x^{2/A - alpha} / log x] is a hard error; x < exp(1e3) is flagged.
BoundResult integral_bound(const LogValue& x, const LogValue& T, double delta,
                           const Params& params);

// Threshold inequalities on the t = loglog p scale (plain doubles; both sides
// are e^t / polylog sized and fit comfortably).
struct ThresholdSides {
    double lhs = 0, rhs = 0;
    bool holds = false;
};
// log(3 * 8.7 C) + 5t < A alpha c0 e^t / (L^{2/3} log^{1/3} L), L = e^t/2 + 3t + log 12
ThresholdSides graphic_threshold(double t, const Params& params = graphic_params());
// log(4 * 8.7 C) + 4t < A alpha c0 e^t / (L^{2/3} log^{1/3} L), L = 2e^t/3 + 2t + log 48
ThresholdSides dpg_threshold(double t, const Params& params = dpg_params());

enum class ThresholdKind { graphic, dpg };

struct ThresholdSample {
    double t = 0, lhs = 0, rhs = 0;
    bool holds = false;
};

struct ThresholdReport {
    ThresholdKind kind = ThresholdKind::graphic;
    double t_min = 0;       // bisection result: inequality holds from here on
    double fails_below = 0; // last bracket point where it still failed
    double paper_t = 0;     // the quoted threshold (30.5 / 34.5)
    bool holds_at_paper_t = false;
    bool single_crossing = false; // no re-crossing on the 0.01 forward sweep
    std::vector<ThresholdSample> samples; // 0.1-step grid over [lo, hi]
};

// Bisects the crossing in [lo, hi] (must fail at lo and hold at hi) to `tol`,
// then sweeps forward at step 0.01 to confirm no re-crossing.
ThresholdReport find_threshold(ThresholdKind kind, double lo, double hi, double tol = 1e-3);

// assorted closed-form bounds (inputs to the zeros module and report tables)
double delange_bound(double sigma);                   // 1/(sigma-1) - 1/(2 sigma^2), sigma > 1
double zeta_ratio_left_bound(double sigma, double t); // 9 + log|sigma+it|, sigma <= -1
double zeta_ratio_horizontal_bound(double t);         // log^2 t + 20 log t, t > 50
double explicit_formula_error(double x, double T);    // 4.6 x log x loglog x / T

struct DusartBounds {
    double lower = 0, upper = 0;
    bool lower_applicable = false; // x >= 599
    bool upper_applicable = false; // x >= 355991
};
DusartBounds dusart_bounds(double x);

} // namespace pgg::analytic
