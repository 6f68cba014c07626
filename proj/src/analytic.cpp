#include "pgg/analytic.hpp"

#include <cmath>

namespace pgg::analytic {

namespace {

constexpr double kE = 2.718281828459045;
// two-term zero-density estimate constants
constexpr double kDensityLead = 2.177;
constexpr double kDensityLogTail = 5.663;

} // namespace

Params graphic_params() {
    Params p;
    p.alpha = 0.249;
    return p;
}

Params dpg_params() {
    Params p;
    p.alpha = 1.0 / 13.0;
    return p;
}

void validate_params(const Params& p) {
    if (!(p.A >= 2.0 && p.A <= 4.0)) throw domain_error("params: A must lie in [2, 4]");
    if (!(p.alpha > 0.0 && p.alpha < 2.0 / p.A))
        throw domain_error("params: alpha must lie in (0, 2/A)");
    if (!(p.c0 > 0.0 && p.c1 > 0.0)) throw domain_error("params: c0, c1 must be positive");
}

double zero_free_eta(double t, double c0) {
    if (!(t > kE)) throw domain_error("zero_free_eta: t must exceed e");
    return zero_free_eta_from_log(std::log(t), c0);
}

double zero_free_eta_from_log(double log_t, double c0) {
    if (!(log_t > 1.0)) throw domain_error("zero_free_eta: log t must exceed 1");
    return c0 * std::pow(log_t, -2.0 / 3.0) * std::pow(std::log(log_t), -1.0 / 3.0);
}

ZeroDensityBound zero_density_bound(double sigma, double T, const Params& params) {
    if (!(sigma >= 0.6 && sigma <= 1.0))
        throw domain_error("zero_density_bound: sigma must lie in [3/5, 1]");
    if (!(T > params.H0)) throw domain_error("zero_density_bound: T must exceed H0");
    double log_t = std::log(T);
    double lead_log = (5.0 - 2.0 * sigma) * std::log(log_t) + params.A * (1.0 - sigma) * log_t;
    ZeroDensityBound out;
    out.two_term = LogValue::from_log(std::log(kDensityLead) + lead_log) +
                   LogValue::from_log(std::log(kDensityLogTail) + 2.0 * std::log(log_t));
    out.one_term = LogValue::from_log(std::log(params.c1) + lead_log);
    return out;
}

double integral_bound_constant(const Params& params) {
    validate_params(params);
    double gap = 2.0 / params.A - params.alpha;
    return 4.0 * 1836.0 * params.c1 / (params.A * params.alpha) * gap * gap * gap * gap;
}

BoundResult large_gap_sum_bound(const LogValue& x, const LogValue& N, const Params& params,
                                const LogValue& max_gap) {
    validate_params(params);
    if (!(params.alpha > 0.0 && params.alpha < 0.75))
        throw domain_error("large_gap_sum_bound: alpha must lie in (0, 3/4)");
    if (x.is_zero() || x.sign() < 0 || N.is_zero() || N.sign() < 0)
        throw domain_error("large_gap_sum_bound: x and N must be positive");
    double lx = x.log_magnitude();
    BoundResult out;
    if (!(lx >= 4e3)) {
        out.hypotheses_ok = false;
        out.violated.push_back("x < exp(4000)");
    }
    double n_floor = std::log(8.0) + (0.25 + params.alpha) * lx + 3.0 * std::log(lx);
    if (!(N.log_magnitude() >= n_floor)) {
        out.hypotheses_ok = false;
        out.violated.push_back("N < 8 x^{1/4+alpha} log^3 x");
    }
    // eta evaluated at 4 x log^2 x / N
    double u_log = std::log(4.0) + lx + 2.0 * std::log(lx) - N.log_magnitude();
    double eta = zero_free_eta_from_log(u_log, params.c0);
    double c = integral_bound_constant(params);
    LogValue first = max_gap * LogValue::from_log(std::log(lx));
    LogValue second = LogValue::from_log(std::log(8.7 * c) +
                                         (1.0 - params.A * params.alpha * eta) * lx +
                                         4.0 * std::log(lx));
    out.value = first + second;
    return out;
}

BoundResult first_moment_bound(const LogValue& x, double delta, const LogValue& integral_value,
                               const LogValue& max_gap) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw domain_error("first_moment_bound: delta must lie in (0, 1]");
    if (x.is_zero() || x.sign() < 0)
        throw domain_error("first_moment_bound: x must be positive");
    if (integral_value.sign() < 0)
        throw domain_error("first_moment_bound: integral value must be nonnegative");
    double lx = x.log_magnitude();
    BoundResult out;
    if (!(lx >= 1e3)) {
        out.hypotheses_ok = false;
        out.violated.push_back("x < exp(1000)");
    }
    // N = 4 delta x must exceed 8 log^2 x
    if (!(std::log(4.0) + std::log(delta) + lx > std::log(8.0) + 2.0 * std::log(lx))) {
        out.hypotheses_ok = false;
        out.violated.push_back("4 delta x <= 8 log^2 x");
    }
    LogValue tail;
    if (!integral_value.is_zero())
        tail = LogValue::from_log(std::log(8.1) + integral_value.log_magnitude() -
                                  2.0 * std::log(delta) - 2.0 * lx);
    out.value = max_gap + tail;
    return out;
}

BoundResult integral_bound(const LogValue& x, const LogValue& T, double delta,
                           const Params& params) {
    validate_params(params);
    if (!(delta > 0.0 && delta <= 1.0))
        throw domain_error("integral_bound: delta must lie in (0, 1]");
    if (x.is_zero() || x.sign() < 0 || T.is_zero() || T.sign() < 0)
        throw domain_error("integral_bound: x and T must be positive");
    double lx = x.log_magnitude();
    double lt = T.log_magnitude();
    if (!(lt > std::log(10.0)))
        throw domain_error("integral_bound: T must exceed 10");
    double t_ceiling = (2.0 / params.A - params.alpha) * lx - std::log(lx);
    if (!(lt <= t_ceiling))
        throw domain_error("integral_bound: T exceeds x^{2/A-alpha} / log x");
    BoundResult out;
    if (!(lx >= 1e3)) {
        out.hypotheses_ok = false;
        out.violated.push_back("x < exp(1000)");
    }
    double eta = zero_free_eta_from_log(lt, params.c0);
    double c = integral_bound_constant(params);
    out.value = LogValue::from_log(std::log(c) + 2.0 * std::log(delta) +
                                   (3.0 - params.A * params.alpha * eta) * lx +
                                   4.0 * std::log(lx));
    return out;
}

namespace {

ThresholdSides threshold_sides(double t, double big_l, double lhs, const Params& params) {
    double rhs = params.A * params.alpha * params.c0 * std::exp(t) /
                 (std::pow(big_l, 2.0 / 3.0) * std::cbrt(std::log(big_l)));
    return {lhs, rhs, lhs < rhs};
}

} // namespace

ThresholdSides graphic_threshold(double t, const Params& params) {
    if (!(t > 1.0)) throw domain_error("graphic_threshold: t must exceed 1");
    double c = integral_bound_constant(params);
    double big_l = 0.5 * std::exp(t) + 3.0 * t + std::log(12.0);
    return threshold_sides(t, big_l, std::log(3.0 * 8.7 * c) + 5.0 * t, params);
}

ThresholdSides dpg_threshold(double t, const Params& params) {
    if (!(t > 1.0)) throw domain_error("dpg_threshold: t must exceed 1");
    double c = integral_bound_constant(params);
    double big_l = (2.0 / 3.0) * std::exp(t) + 2.0 * t + std::log(48.0);
    return threshold_sides(t, big_l, std::log(4.0 * 8.7 * c) + 4.0 * t, params);
}

ThresholdReport find_threshold(ThresholdKind kind, double lo, double hi, double tol) {
    if (!(lo < hi)) throw domain_error("find_threshold: need lo < hi");
    if (!(tol > 0)) throw domain_error("find_threshold: tol must be positive");
    auto eval = [&](double t) {
        return kind == ThresholdKind::graphic ? graphic_threshold(t) : dpg_threshold(t);
    };
    ThresholdReport report;
    report.kind = kind;
    report.paper_t = kind == ThresholdKind::graphic ? 30.5 : 34.5;
    if (eval(lo).holds)
        throw error("find_threshold: no sign change, inequality already holds at lo");
    if (!eval(hi).holds)
        throw error("find_threshold: no sign change, inequality still fails at hi");
    double bad = lo, good = hi;
    while (good - bad > tol) {
        double mid = 0.5 * (bad + good);
        (eval(mid).holds ? good : bad) = mid;
    }
    report.t_min = good;
    report.fails_below = bad;
    report.single_crossing = true;
    for (double t = good; t <= hi + 1e-12; t += 0.01) {
        if (!eval(t).holds) {
            report.single_crossing = false;
            break;
        }
    }
    report.holds_at_paper_t = eval(report.paper_t).holds;
    for (double t = lo; t <= hi + 1e-12; t += 0.1) {
        auto s = eval(t);
        report.samples.push_back({t, s.lhs, s.rhs, s.holds});
    }
    return report;
}

double delange_bound(double sigma) {
    if (!(sigma > 1.0)) throw domain_error("delange_bound: sigma must exceed 1");
    return 1.0 / (sigma - 1.0) - 1.0 / (2.0 * sigma * sigma);
}

double zeta_ratio_left_bound(double sigma, double t) {
    if (!(sigma <= -1.0)) throw domain_error("zeta_ratio_left_bound: sigma must be <= -1");
    bool odd_integer = std::fabs(sigma - std::round(sigma)) < 1e-12 &&
                       std::llround(std::fabs(sigma)) % 2 == 1;
    if (!odd_integer && !(std::fabs(t) >= 1.0))
        throw domain_error("zeta_ratio_left_bound: need sigma odd or |t| >= 1");
    return 9.0 + 0.5 * std::log(sigma * sigma + t * t);
}

double zeta_ratio_horizontal_bound(double t) {
    if (!(t > 50.0)) throw domain_error("zeta_ratio_horizontal_bound: t must exceed 50");
    double lt = std::log(t);
    return lt * lt + 20.0 * lt;
}

double explicit_formula_error(double x, double T) {
    if (!(x > kE)) throw domain_error("explicit_formula_error: x must exceed e");
    if (!(T > 0)) throw domain_error("explicit_formula_error: T must be positive");
    double lx = std::log(x);
    return 4.6 * x * lx * std::log(lx) / T;
}

DusartBounds dusart_bounds(double x) {
    if (!(x > 1.0)) throw domain_error("dusart_bounds: x must exceed 1");
    double lx = std::log(x);
    DusartBounds b;
    b.lower = x / lx * (1.0 + 1.0 / lx);
    b.upper = x / lx * (1.0 + 1.0 / lx + 2.51 / (lx * lx));
    b.lower_applicable = x >= 599.0;
    b.upper_applicable = x >= 355991.0;
    return b;
}

} // namespace pgg::analytic
