#include "pgg/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>

#include "pgg/analytic.hpp"

namespace pgg::zeros {

namespace {

constexpr double kH0 = 3e12;

} // namespace

ZeroTable load_zeros(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("zeros: cannot open " + path);
    ZeroTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        double value = 0;
        try {
            std::size_t used = 0;
            value = std::stod(line.substr(pos), &used);
            std::size_t rest = line.find_first_not_of(" \t\r", pos + used);
            if (rest != std::string::npos)
                throw io_error("trailing junk");
        } catch (const std::exception&) {
            throw io_error("zeros: parse error at line " + std::to_string(lineno) + " of " +
                           path);
        }
        if (!(value > 0))
            throw io_error("zeros: nonpositive ordinate at line " + std::to_string(lineno));
        if (!table.ordinates.empty() && value <= table.ordinates.back())
            throw io_error("zeros: ordinates not strictly ascending at line " +
                           std::to_string(lineno));
        if (value >= kH0)
            throw io_error("zeros: ordinate at line " + std::to_string(lineno) +
                           " is above the verified height 3e12");
        table.ordinates.push_back(value);
    }
    if (table.ordinates.empty()) throw io_error("zeros: " + path + " contains no ordinates");
    return table;
}

RectCountReport rect_count_check(const ZeroTable& z) {
    if (!(z.max_ordinate() > 12))
        throw domain_error("rect_count_check: need ordinates beyond 12");
    RectCountReport report;
    const auto& ord = z.ordinates;
    double t_max = z.max_ordinate() - 1.0;
    auto window_count = [&](double t) {
        auto lo = std::upper_bound(ord.begin(), ord.end(), t - 1.0);
        auto hi = std::lower_bound(ord.begin(), ord.end(), t + 1.0);
        return static_cast<std::int64_t>(hi - lo);
    };
    auto check = [&](double t) {
        std::int64_t count = window_count(t);
        double bound = std::log(t);
        if (!(static_cast<double>(count) < bound))
            report.violations.push_back({t, count, bound});
    };
    for (double t = 10.5; t <= t_max; t += 0.5) {
        check(t);
        ++report.grid_points;
    }
    for (std::size_t i = 0; i + 1 < ord.size(); ++i) {
        double t = 0.5 * (ord[i] + ord[i + 1]);
        if (t > 10.0 && t <= t_max) {
            check(t);
            ++report.midpoints;
        }
    }
    report.pass = report.violations.empty();
    return report;
}

ExplicitFormulaResult explicit_formula_psi(double x, double T, const ZeroTable& z) {
    if (!(x > 10)) throw domain_error("explicit_formula_psi: x must exceed 10");
    if (!(T > 50)) throw domain_error("explicit_formula_psi: T must exceed 50");
    if (T > z.max_ordinate())
        throw error("explicit_formula_psi: T=" + std::to_string(T) +
                    " exceeds the table's max ordinate " + std::to_string(z.max_ordinate()));
    if (x == std::floor(x)) x += 0.5; // the formula needs non-integer x

    double sqrt_x = std::sqrt(x);
    double log_x = std::log(x);
    double sum = 0.0, comp = 0.0;
    for (double gamma : z.ordinates) {
        if (gamma >= T) break;
        // 2 Re(x^rho / rho) at rho = 1/2 + i gamma
        double phase = gamma * log_x;
        double term = 2.0 * sqrt_x * (0.5 * std::cos(phase) + gamma * std::sin(phase)) /
                      (0.25 + gamma * gamma);
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    ExplicitFormulaResult out;
    out.x = x;
    out.approx = x - sum;
    out.trunc_error = analytic::explicit_formula_error(x, T);
    return out;
}

double integral_quadrature(double x, double T, double delta, const ZeroTable& z) {
    if (!(x >= 10 && x <= 1e8))
        throw domain_error("integral_quadrature: x must lie in [10, 1e8]");
    if (!(delta > 0 && delta <= 1))
        throw domain_error("integral_quadrature: delta must lie in (0, 1]");
    if (T > z.max_ordinate())
        throw error("integral_quadrature: T exceeds the table's max ordinate");

    std::vector<double> gammas;
    std::vector<double> c_re, c_im;
    double sqrt_1d = std::sqrt(1.0 + delta);
    double log_1d = std::log(1.0 + delta);
    for (double gamma : z.ordinates) {
        if (gamma >= T) break;
        std::complex<double> rho(0.5, gamma);
        std::complex<double> pw = sqrt_1d * std::exp(std::complex<double>(0.0, gamma * log_1d));
        std::complex<double> c = (1.0 - pw) / rho;
        gammas.push_back(gamma);
        c_re.push_back(c.real());
        c_im.push_back(c.imag());
    }
    if (gammas.empty()) return 0.0;

    // |2 Re sum y^{1/2+ig} C|^2, folding conjugate pairs
    auto integrand = [&](double y) {
        double log_y = std::log(y);
        double s = 0.0;
        for (std::size_t i = 0; i < gammas.size(); ++i) {
            double phase = gammas[i] * log_y;
            s += c_re[i] * std::cos(phase) - c_im[i] * std::sin(phase);
        }
        double v = 2.0 * std::sqrt(y) * s;
        return v * v;
    };

    auto simpson = [&](std::int64_t intervals) {
        double h = x / static_cast<double>(intervals); // [x, 2x] has length x
        double acc = integrand(x) + integrand(2 * x);
        for (std::int64_t j = 1; j < intervals; ++j)
            acc += integrand(x + h * static_cast<double>(j)) * (j % 2 == 1 ? 4.0 : 2.0);
        return acc * h / 3.0;
    };

    // fastest oscillation: phase gamma_max * log y changes by gamma_max*log 2
    double oscillations = gammas.back() * std::log(2.0) / (2.0 * 3.14159265358979323846);
    std::int64_t intervals = 128;
    while (static_cast<double>(intervals) < 24.0 * oscillations) intervals *= 2;

    constexpr double kCostCap = 2e8; // integrand evaluations x zero count
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (;;) {
        double cost = static_cast<double>(intervals) * static_cast<double>(gammas.size());
        if (cost > kCostCap)
            throw CostCapError("integral_quadrature: cost cap exceeded; retry with T <= " +
                                   std::to_string(T / 2),
                               T / 2);
        double value = simpson(intervals);
        if (!std::isnan(prev)) {
            double scale = std::max(std::fabs(value), 1e-300);
            if (std::fabs(value - prev) <= 0.0025 * scale) return value;
        }
        prev = value;
        intervals *= 2;
    }
}

} // namespace pgg::zeros
