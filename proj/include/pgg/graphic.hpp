#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pgg/common.hpp"
#include "pgg/primes.hpp"

namespace pgg::graphic {

// Degree sequence as value -> multiplicity, iterated in descending value
// order. Sequences are never materialized as sorted arrays; every test below
// runs over the distinct values only.
class DegreeMultiset {
public:
    DegreeMultiset() = default;

    static DegreeMultiset from_values(std::span<const std::int64_t> values);

    void insert(std::int64_t value, std::int64_t multiplicity = 1);

    std::int64_t size() const { return n_; }
    std::int64_t sum() const { return sum_; }
    std::int64_t multiplicity(std::int64_t value) const;
    std::int64_t max_value() const;

    // descending by value
    const std::map<std::int64_t, std::int64_t, std::greater<>>& counts() const {
        return counts_;
    }

    std::vector<std::int64_t> to_sorted_vector() const; // descending

    friend bool operator==(const DegreeMultiset& a, const DegreeMultiset& b) {
        return a.counts_ == b.counts_;
    }

private:
    std::map<std::int64_t, std::int64_t, std::greater<>> counts_;
    std::int64_t n_ = 0;
    std::int64_t sum_ = 0;
};

struct GraphicVerdict {
    bool graphic = false;
    std::optional<std::int64_t> failing_k; // first violated k (even sum only)
    std::int64_t m = 0;                    // max { i : d_i >= i }
    std::vector<std::int64_t> checked_ks;
};

// Erdos-Gallai over every k in [1, n-1]. checked_ks is recorded only for
// n <= 1000 (plus the failing k when there is one).
GraphicVerdict erdos_gallai_full(const DegreeMultiset& seq);

// Zverovich-Zverovich / Tripathi-Vijay reduction: test k = min(m, n-1) and
// the descents k < m with d_k > d_{k+1} only. Verdict-equivalent to the full
// criterion on every input.
GraphicVerdict erdos_gallai_reduced(const DegreeMultiset& seq);

// Consumes the prime gap stream in index order and tests each prefix PD_n.
class IncrementalPdVerifier {
public:
    explicit IncrementalPdVerifier(std::int64_t max_n);

    // record indices must arrive as 1, 2, 3, ...; anything else throws
    GraphicVerdict push(const primes::GapRecord& record);

    std::int64_t n() const { return next_index_ - 1; }
    std::int64_t max_n() const { return max_n_; }
    const DegreeMultiset& degrees() const { return degrees_; }

private:
    std::int64_t max_n_;
    std::int64_t next_index_ = 1;
    DegreeMultiset degrees_;
};

} // namespace pgg::graphic
