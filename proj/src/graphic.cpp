#include "pgg/graphic.hpp"

#include <algorithm>

namespace pgg::graphic {

DegreeMultiset DegreeMultiset::from_values(std::span<const std::int64_t> values) {
    DegreeMultiset ms;
    for (std::int64_t v : values) ms.insert(v);
    return ms;
}

void DegreeMultiset::insert(std::int64_t value, std::int64_t multiplicity) {
    if (value < 0) throw domain_error("DegreeMultiset: negative degree");
    if (multiplicity <= 0) throw domain_error("DegreeMultiset: multiplicity must be positive");
    counts_[value] += multiplicity;
    n_ += multiplicity;
    sum_ += value * multiplicity;
}

std::int64_t DegreeMultiset::multiplicity(std::int64_t value) const {
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
}

std::int64_t DegreeMultiset::max_value() const {
    return counts_.empty() ? 0 : counts_.begin()->first;
}

std::vector<std::int64_t> DegreeMultiset::to_sorted_vector() const {
    std::vector<std::int64_t> out;
    out.reserve(n_);
    for (auto [v, c] : counts_)
        for (std::int64_t i = 0; i < c; ++i) out.push_back(v);
    return out;
}

namespace {

// Snapshot of the multiset as blocks of equal value, descending, with
// cumulative counts and sums. All criterion arithmetic runs on this view.
struct BlockView {
    std::vector<std::int64_t> value; // descending
    std::vector<std::int64_t> hi;    // cumulative count through this block
    std::vector<std::int64_t> csum;  // cumulative degree sum through this block
    std::int64_t n = 0;
    std::int64_t sum = 0;

    void build(const DegreeMultiset& ms) {
        value.clear();
        hi.clear();
        csum.clear();
        n = ms.size();
        sum = ms.sum();
        std::int64_t cc = 0, cs = 0;
        for (auto [v, c] : ms.counts()) {
            cc += c;
            cs += v * c;
            value.push_back(v);
            hi.push_back(cc);
            csum.push_back(cs);
        }
    }

    // sum of the k largest entries, 0 <= k <= n
    std::int64_t prefix(std::int64_t k) const {
        if (k <= 0) return 0;
        auto it = std::lower_bound(hi.begin(), hi.end(), k);
        std::size_t b = static_cast<std::size_t>(it - hi.begin());
        std::int64_t below = b == 0 ? 0 : csum[b - 1];
        std::int64_t below_cnt = b == 0 ? 0 : hi[b - 1];
        return below + (k - below_cnt) * value[b];
    }

    // number of entries with value >= x
    std::int64_t count_ge(std::int64_t x) const {
        // value[] descending: find first block with value < x
        auto it = std::lower_bound(value.begin(), value.end(), x, std::greater_equal<>());
        if (it == value.begin()) return 0;
        return hi[static_cast<std::size_t>(it - value.begin()) - 1];
    }

    // m = max { i : d_i >= i }, 0 when d_1 = 0 or the multiset is empty
    std::int64_t compute_m() const {
        std::int64_t m = 0;
        for (std::size_t b = 0; b < value.size(); ++b) {
            std::int64_t lo = b == 0 ? 1 : hi[b - 1] + 1;
            if (value[b] < lo) break;
            m = std::min(value[b], hi[b]);
            if (m < hi[b]) break;
        }
        return m;
    }

    // sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i)
    bool eg_holds(std::int64_t k) const {
        std::int64_t lhs = prefix(k);
        std::int64_t c = count_ge(k);
        std::int64_t j = std::max(k, c);
        std::int64_t rhs = k * (k - 1) + k * std::max<std::int64_t>(0, c - k) + (sum - prefix(j));
        return lhs <= rhs;
    }
};

void self_check_m(std::int64_t m, std::int64_t sum) {
    // d_i >= i for i <= m forces sum >= m^2
    if (m * m > sum) throw error("graphic: m^2 > degree sum, criterion state corrupt");
}

GraphicVerdict trivial_small(const DegreeMultiset& seq) {
    // n <= 1: a lone vertex only realizes degree 0
    GraphicVerdict v;
    v.graphic = seq.size() == 0 || seq.max_value() == 0;
    v.m = seq.max_value() > 0 ? 1 : 0;
    if (!v.graphic && seq.sum() % 2 == 0) v.failing_k = 1;
    if (!v.graphic) v.checked_ks.push_back(1);
    return v;
}

} // namespace

GraphicVerdict erdos_gallai_full(const DegreeMultiset& seq) {
    if (seq.size() <= 1) return trivial_small(seq);
    BlockView view;
    view.build(seq);
    GraphicVerdict verdict;
    verdict.m = view.compute_m();
    self_check_m(verdict.m, view.sum);
    if (view.sum % 2 != 0) return verdict; // graphic=false, no failing k
    bool record_all = view.n <= 1000;
    for (std::int64_t k = 1; k <= view.n - 1; ++k) {
        if (record_all) verdict.checked_ks.push_back(k);
        if (!view.eg_holds(k)) {
            verdict.failing_k = k;
            if (!record_all) verdict.checked_ks.push_back(k);
            return verdict;
        }
    }
    verdict.graphic = true;
    return verdict;
}

GraphicVerdict erdos_gallai_reduced(const DegreeMultiset& seq) {
    if (seq.size() <= 1) return trivial_small(seq);
    BlockView view;
    view.build(seq);
    GraphicVerdict verdict;
    verdict.m = view.compute_m();
    self_check_m(verdict.m, view.sum);
    if (view.sum % 2 != 0) return verdict;
    if (verdict.m == 0) { // all degrees zero
        verdict.graphic = true;
        return verdict;
    }
    // descents below m, then k = min(m, n-1)
    for (std::size_t b = 0; b + 1 < view.hi.size(); ++b) {
        if (view.hi[b] < verdict.m) verdict.checked_ks.push_back(view.hi[b]);
    }
    std::int64_t k_main = std::min(verdict.m, view.n - 1);
    if (verdict.checked_ks.empty() || verdict.checked_ks.back() != k_main)
        verdict.checked_ks.push_back(k_main);
    for (std::int64_t k : verdict.checked_ks) {
        if (!view.eg_holds(k)) {
            verdict.failing_k = k;
            return verdict;
        }
    }
    verdict.graphic = true;
    return verdict;
}

IncrementalPdVerifier::IncrementalPdVerifier(std::int64_t max_n) : max_n_(max_n) {
    if (max_n < 2) throw domain_error("IncrementalPdVerifier: max_n must be >= 2");
}

GraphicVerdict IncrementalPdVerifier::push(const primes::GapRecord& record) {
    if (record.index != next_index_)
        throw error("IncrementalPdVerifier: expected record " + std::to_string(next_index_) +
                    ", got " + std::to_string(record.index));
    if (record.index > max_n_)
        throw error("IncrementalPdVerifier: past max_n");
    ++next_index_;
    degrees_.insert(record.gap);
    return erdos_gallai_reduced(degrees_);
}

} // namespace pgg::graphic
