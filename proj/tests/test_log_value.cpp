#include <doctest.h>

#include <cmath>
#include <random>

#include "pgg/log_value.hpp"

using pgg::analytic::LogValue;

TEST_CASE("log value round trip") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> logs(-700.0, 700.0);
    for (int i = 0; i < 2000; ++i) {
        double lg = logs(rng);
        LogValue v = LogValue::from_log(lg);
        CHECK(v.log_magnitude() == lg);
        if (std::fabs(lg) < 650) {
            double d = v.to_double();
            LogValue back = LogValue::from_double(d);
            CHECK(back.log_magnitude() == doctest::Approx(lg).epsilon(1e-12));
        }
    }
}

TEST_CASE("multiplication adds logs and addition is log-sum-exp") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> logs(-300.0, 300.0);
    for (int i = 0; i < 2000; ++i) {
        double la = logs(rng), lb = logs(rng), lc = logs(rng);
        LogValue a = LogValue::from_log(la), b = LogValue::from_log(lb),
                 c = LogValue::from_log(lc);
        CHECK((a * b).log_magnitude() == doctest::Approx(la + lb).epsilon(1e-14));
        // commutativity is exact, associativity to tolerance
        CHECK((a + b).log_magnitude() == (b + a).log_magnitude());
        double left = ((a + b) + c).log_magnitude();
        double right = (a + (b + c)).log_magnitude();
        CHECK(left == doctest::Approx(right).epsilon(1e-12));
        CHECK((a * b) / b > LogValue::zero());
        CHECK(((a * b) / b).log_magnitude() == doctest::Approx(la).epsilon(1e-12));
    }
}

TEST_CASE("signed arithmetic") {
    LogValue five = LogValue::from_double(5.0);
    LogValue three = LogValue::from_double(-3.0);
    CHECK((five + three).to_double() == doctest::Approx(2.0));
    CHECK((five * three).to_double() == doctest::Approx(-15.0));
    CHECK((three - five).to_double() == doctest::Approx(-8.0));
    CHECK((five - five).is_zero());
    CHECK(LogValue::zero() + five > LogValue::zero());
    CHECK(three < LogValue::zero());
    CHECK(three < five);
    CHECK(LogValue::from_double(-7.0) < three);
    CHECK_THROWS_AS(five / LogValue::zero(), pgg::domain_error);
    CHECK_THROWS_AS(three.pow(0.5), pgg::domain_error);
    CHECK(five.pow(2.0).to_double() == doctest::Approx(25.0));
}

TEST_CASE("huge magnitudes stay exact on the log scale") {
    LogValue x = LogValue::from_log(5000.0);      // e^5000
    LogValue y = LogValue::from_log(5040.0);      // e^5040
    LogValue sum = x + y;
    // adding e^5000 shifts log(e^5040) by log1p(e^-40)
    CHECK(sum.log_magnitude() ==
          doctest::Approx(5040.0 + std::log1p(std::exp(-40.0))).epsilon(1e-15));
    CHECK((x * x).log_magnitude() == doctest::Approx(10000.0));
    CHECK(x.pow(0.5).log_magnitude() == doctest::Approx(2500.0));
}
