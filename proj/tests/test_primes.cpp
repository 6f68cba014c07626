#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "pgg/gap_cache.hpp"
#include "pgg/primes.hpp"

namespace primes = pgg::primes;

TEST_CASE("gap stream over small limits") {
    auto gaps = primes::gap_list(30);
    std::vector<std::int64_t> values;
    for (const auto& r : gaps) values.push_back(r.gap);
    CHECK(values == std::vector<std::int64_t>{1, 1, 2, 2, 4, 2, 4, 2, 4, 6});
    CHECK(gaps.front().index == 1);
    CHECK(gaps.front().prime == 2);
    CHECK(gaps.back().prime == 29);

    auto two = primes::gap_list(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].index == 1);
    CHECK(two[0].prime == 2);
    CHECK(two[0].gap == 1);

    auto three = primes::gap_list(3);
    REQUIRE(three.size() == 2);
    CHECK(three[1].prime == 3);
    CHECK(three[1].gap == 1);

    CHECK_THROWS_AS(primes::gap_list(1), pgg::domain_error);
}

TEST_CASE("gap telescoping and first_gaps") {
    auto gaps = primes::first_gaps(10000);
    REQUIRE(gaps.size() == 10000);
    CHECK(gaps.back().prime == 104729); // p_10000
    std::int64_t sum = 0;
    for (const auto& r : gaps) sum += r.gap;
    CHECK(sum == gaps.back().prime - 1);
}

TEST_CASE("chebyshev psi") {
    CHECK(primes::chebyshev_psi(1) == 0.0);
    double expected10 = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
    CHECK(primes::chebyshev_psi(10) == doctest::Approx(expected10).epsilon(1e-14));
    // 50-digit references: 94.045311229357392246 and 996.68091224717524026
    CHECK(primes::chebyshev_psi(100) == doctest::Approx(94.045311229357392246).epsilon(1e-13));
    CHECK(primes::chebyshev_psi(1000) == doctest::Approx(996.68091224717524026).epsilon(1e-13));

    // independent reference: n contributes log p iff n is a power of its
    // smallest prime factor p
    for (std::int64_t x : {50, 321, 1000}) {
        double brute = 0;
        for (std::int64_t n = 2; n <= x; ++n) {
            std::int64_t p = 0;
            for (std::int64_t d = 2; d * d <= n; ++d)
                if (n % d == 0) {
                    p = d;
                    break;
                }
            if (p == 0) p = n;
            std::int64_t m = n;
            while (m % p == 0) m /= p;
            if (m == 1) brute += std::log(static_cast<double>(p));
        }
        CHECK(primes::chebyshev_psi(x) == doctest::Approx(brute).epsilon(1e-12));
    }
}

TEST_CASE("psi equals the theta ladder") {
    // psi(x) = sum over k of theta(x^(1/k)), theta via an independent prime walk
    for (std::int64_t x : {1000, 31623, 100000}) {
        double ladder = 0;
        for (std::int64_t k = 1;; ++k) {
            // integer k-th root
            std::int64_t root = static_cast<std::int64_t>(
                std::floor(std::pow(static_cast<double>(x), 1.0 / k) + 1e-9));
            while (root > 1) {
                // verify root^k <= x < (root+1)^k with overflow care
                auto pow_le = [&](std::int64_t b) {
                    std::int64_t acc = 1;
                    for (std::int64_t i = 0; i < k; ++i) {
                        if (acc > x / b + 1) return false;
                        acc *= b;
                        if (acc > x) return false;
                    }
                    return true;
                };
                if (pow_le(root) && !pow_le(root + 1)) break;
                root += pow_le(root + 1) ? 1 : -1;
            }
            if (root < 2) break;
            primes::for_each_prime(root, [&](std::int64_t p) {
                ladder += std::log(static_cast<double>(p));
                return true;
            });
        }
        CHECK(primes::chebyshev_psi(x) == doctest::Approx(ladder).epsilon(1e-11));
    }
}

TEST_CASE("prime counting") {
    CHECK(primes::prime_count(0) == 0);
    CHECK(primes::prime_count(1) == 0);
    CHECK(primes::prime_count(10) == 4);
    CHECK(primes::prime_count(599) == 109);
    CHECK(primes::prime_count(1000000) == 78498);
}

TEST_CASE("forward gap statistics") {
    CHECK(primes::max_forward_gap(10) == 4);   // 7 -> 11
    CHECK(primes::max_forward_gap(100) == 8);  // 89 -> 97
    CHECK(primes::max_forward_gap(3) == 2);    // 3 -> 5

    auto [k, s] = primes::large_gap_count_sum(29, 4);
    CHECK(k == 4); // gaps >= 4 start at 7, 13, 19, 23
    CHECK(s == 6); // only 23 -> 29 is strictly above 4
    auto [k2, s2] = primes::large_gap_count_sum(29, 100);
    CHECK(k2 == 0);
    CHECK(s2 == 0);
}

TEST_CASE("k and S agree with a naive filter") {
    std::int64_t limit = 100000;
    auto gaps = primes::gap_list(limit + 200);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> xs(2, limit);
    std::vector<std::int64_t> sample = {2, 3, 29, 599, 10000, limit};
    for (int i = 0; i < 40; ++i) sample.push_back(xs(rng));
    for (std::int64_t x : sample) {
        for (std::int64_t n : {1, 2, 4, 6, 10, 36}) {
            std::int64_t k = 0, s = 0;
            for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
                if (gaps[i].prime > x) break;
                std::int64_t fwd = gaps[i + 1].prime - gaps[i].prime;
                if (fwd >= n) ++k;
                if (fwd > n) s += fwd;
            }
            auto [mk, ms] = primes::large_gap_count_sum(x, n);
            CHECK(mk == k);
            CHECK(ms == s);
        }
    }
}

TEST_CASE("gap stats histogram cross-checks") {
    auto st = primes::gap_stats(10000, {2, 4, 6});
    std::int64_t total = 0;
    for (auto [g, c] : st.histogram) total += c;
    CHECK(total == primes::prime_count(10000));
    auto [k2, s2] = primes::large_gap_count_sum(10000, 2);
    CHECK(st.k_n.at(2) == k2);
    CHECK(st.s_n.at(2) == s2);
    CHECK(st.max_gap == primes::max_forward_gap(10000));
}

TEST_CASE("dusart sweep holds at desk scale") {
    auto grid = primes::dusart_sweep(2'000'000, 200);
    REQUIRE(grid.size() >= 150);
    for (const auto& p : grid) {
        CHECK(static_cast<double>(p.pi) >= p.lower);
        if (p.upper_applicable) CHECK(static_cast<double>(p.pi) <= p.upper);
    }
    CHECK(grid.front().x == 599);
    CHECK(grid.front().pi == 109);
}

TEST_CASE("gap cache round trip, resume, and corruption") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "pgg_cache_test";
    fs::create_directories(dir);
    std::string path = (dir / "gaps.bin").string();

    auto info = primes::write_gap_cache(path, 10000);
    CHECK(info.limit == 10000);
    CHECK(info.count == 1229);

    std::vector<primes::GapRecord> cached;
    primes::stream_gap_cache(path, 0, [&](const primes::GapRecord& r) {
        cached.push_back(r);
        return true;
    });
    auto fresh = primes::gap_list(10000);
    REQUIRE(cached.size() == fresh.size());
    for (std::size_t i = 0; i < cached.size(); ++i) {
        CHECK(cached[i].prime == fresh[i].prime);
        CHECK(cached[i].gap == fresh[i].gap);
    }

    // early stop at a prime bound
    std::vector<primes::GapRecord> head;
    primes::stream_gap_cache(path, 100, [&](const primes::GapRecord& r) {
        head.push_back(r);
        return true;
    });
    CHECK(head.size() == 25);
    CHECK(head.back().prime == 97);

    // resume-extend must equal a fresh sieve
    auto extended = primes::ensure_gap_cache(path, 30000);
    CHECK(extended.limit == 30000);
    std::vector<primes::GapRecord> cached2;
    primes::stream_gap_cache(path, 0, [&](const primes::GapRecord& r) {
        cached2.push_back(r);
        return true;
    });
    auto fresh2 = primes::gap_list(30000);
    REQUIRE(cached2.size() == fresh2.size());
    CHECK(cached2.back().prime == fresh2.back().prime);

    // flip one payload byte: checksum must catch it
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(40);
        char b;
        f.seekg(40);
        f.get(b);
        f.seekp(40);
        f.put(static_cast<char>(b ^ 0x20));
    }
    CHECK_THROWS_WITH_AS(
        primes::stream_gap_cache(path, 0, [](const primes::GapRecord&) { return true; }),
        doctest::Contains("checksum"), pgg::io_error);

    // bad magic
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        f << "NOPE";
    }
    CHECK_THROWS_AS(primes::read_gap_cache_info(path), pgg::io_error);
    fs::remove_all(dir);
}
