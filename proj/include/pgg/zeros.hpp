#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgg/common.hpp"

namespace pgg::zeros {

// Ascending positive ordinates of nontrivial zeta zeros, all below the
// verified-RH height, so beta = 1/2 is assumed throughout.
struct ZeroTable {
    std::vector<double> ordinates;
    std::int64_t count() const { return static_cast<std::int64_t>(ordinates.size()); }
    double max_ordinate() const { return ordinates.empty() ? 0.0 : ordinates.back(); }
};

// Text format: one decimal ordinate per line, ascending; '#' comments and
// blank lines allowed. Parse errors carry the line number.
ZeroTable load_zeros(const std::string& path);

struct RectViolation {
    double t = 0;
    std::int64_t count = 0;
    double bound = 0; // log t
};

struct RectCountReport {
    std::int64_t grid_points = 0;
    std::int64_t midpoints = 0;
    std::vector<RectViolation> violations;
    bool pass = false;
};

// Zero count in every window (t-1, t+1) must stay below log t, checked on the
// half-integer grid from 10.5 up to max_ordinate - 1 and at every midpoint of
// consecutive ordinates in range.
RectCountReport rect_count_check(const ZeroTable& z);

struct ExplicitFormulaResult {
    double x = 0; // the value actually used (nudged off integers)
    double approx = 0;
    double trunc_error = 0; // 4.6 x log x loglog x / T
};

// psi(x) ~ x - sum_{0<gamma<T} 2 Re(x^rho / rho) with rho = 1/2 + i gamma.
// Needs 50 < T <= max ordinate and x > 10; integral x is nudged by +1/2.
ExplicitFormulaResult explicit_formula_psi(double x, double T, const ZeroTable& z);

class CostCapError : public error {
public:
    CostCapError(const std::string& msg, double suggested_t)
        : error(msg), suggested_t(suggested_t) {}
    double suggested_t;
};

// Numeric integral of |sum_{|Im rho|<T} y^rho C(rho)|^2 over [x, 2x], where
// C(rho) = (1 - (1+delta)^rho)/rho. Composite Simpson, node count doubled
// until the value is stable to 0.25%; refuses (CostCapError) when the work
// would exceed the cost cap. x <= 1e8, 0 < delta <= 1, T <= max ordinate.
double integral_quadrature(double x, double T, double delta, const ZeroTable& z);

} // namespace pgg::zeros
