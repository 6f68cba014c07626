#pragma once

#include <cmath>
#include <limits>

#include "pgg/common.hpp"

namespace pgg::analytic {

// A signed real carried as (sign, log|value|). This is the working type for
// bound arithmetic whose magnitudes (x = e^5000 and far beyond) do not fit in
// a double. Multiplication adds logs; addition goes through log-sum-exp.
class LogValue {
public:
    constexpr LogValue() = default;

    static LogValue zero() { return LogValue(); }
    static LogValue one() { return from_log(0.0); }

    static LogValue from_log(double log_magnitude, int sign = +1) {
        if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity())
            return LogValue();
        LogValue v;
        v.log_ = log_magnitude;
        v.sign_ = sign > 0 ? +1 : -1;
        return v;
    }

    static LogValue from_double(double x) {
        if (x == 0.0) return LogValue();
        return from_log(std::log(std::fabs(x)), x > 0 ? +1 : -1);
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    // log of the magnitude; -inf for zero
    double log_magnitude() const { return log_; }

    // may overflow to +-inf for |log| > ~709
    double to_double() const {
        if (sign_ == 0) return 0.0;
        return sign_ * std::exp(log_);
    }

    LogValue operator-() const {
        LogValue v = *this;
        v.sign_ = -v.sign_;
        return v;
    }

    friend LogValue operator*(const LogValue& a, const LogValue& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return LogValue();
        return from_log(a.log_ + b.log_, a.sign_ * b.sign_);
    }

    friend LogValue operator/(const LogValue& a, const LogValue& b) {
        if (b.sign_ == 0) throw domain_error("LogValue: division by zero");
        if (a.sign_ == 0) return LogValue();
        return from_log(a.log_ - b.log_, a.sign_ * b.sign_);
    }

    friend LogValue operator+(const LogValue& a, const LogValue& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        if (a.sign_ == b.sign_) {
            double hi = std::max(a.log_, b.log_);
            double lo = std::min(a.log_, b.log_);
            return from_log(hi + std::log1p(std::exp(lo - hi)), a.sign_);
        }
        // opposite signs: magnitude subtraction, larger magnitude wins
        const LogValue& big = a.log_ >= b.log_ ? a : b;
        const LogValue& small = a.log_ >= b.log_ ? b : a;
        if (big.log_ == small.log_) return LogValue();
        double d = small.log_ - big.log_; // < 0
        return from_log(big.log_ + std::log1p(-std::exp(d)), big.sign_);
    }

    friend LogValue operator-(const LogValue& a, const LogValue& b) { return a + (-b); }

    // magnitude power; requires a nonnegative base unless e is an integer
    LogValue pow(double e) const {
        if (sign_ == 0) {
            if (e <= 0.0) throw domain_error("LogValue: 0 to nonpositive power");
            return LogValue();
        }
        if (sign_ < 0) throw domain_error("LogValue: pow of negative value");
        return from_log(log_ * e, +1);
    }

    friend bool operator<(const LogValue& a, const LogValue& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        if (a.sign_ == 0) return false;
        return a.sign_ > 0 ? a.log_ < b.log_ : a.log_ > b.log_;
    }
    friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
    friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
    friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }

private:
    double log_ = -std::numeric_limits<double>::infinity();
    int sign_ = 0;
};

} // namespace pgg::analytic
