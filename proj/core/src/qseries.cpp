#include "qmzv/qseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "qmzv/stuffle.hpp"

namespace qmzv {

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::string TruncatedSeries::str() const {
    std::string out;
    for (std::uint32_t n = 0; n <= order_; ++n) {
        out += std::to_string(n);
        out += ": ";
        out += rational_str(coeffs_[n]);
        out += '\n';
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (order_ != o.order_)
        throw std::domain_error("series order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(o.order_));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order_ != b.order_)
        throw std::domain_error("series order mismatch: " + std::to_string(a.order_) + " vs " +
                                std::to_string(b.order_));
    TruncatedSeries out(a.order_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries out(order_);
    if (c == 0) return out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        if (coeffs_[n] != 0) out.coeffs_[n] = coeffs_[n] * c;
    return out;
}

namespace {

// q^{mk} / (1 - q^m)^k truncated at the order: coefficient of q^{m t} is
// binom(t - 1, k - 1) for t >= k.
TruncatedSeries geometric_power(std::uint64_t m, std::uint64_t k, std::uint32_t order) {
    TruncatedSeries out(order);
    for (std::uint64_t t = k; m * t <= order; ++t)
        out.set_coefficient(static_cast<std::uint32_t>(m * t),
                            Rational(binomial(static_cast<std::int64_t>(t - 1),
                                              static_cast<std::int64_t>(k - 1))));
    return out;
}

struct SzEvaluator {
    const CanonicalForm& form;
    std::uint32_t order;
    TruncatedSeries result;
    std::map<std::pair<std::uint64_t, std::uint64_t>, TruncatedSeries> factor_cache;
    // minimal extra q-order contributed by levels j..d-1 given the strict
    // descent m_j > m_{j+1} > ... > m_{d-1} >= 1
    std::vector<std::uint64_t> tail_min;

    explicit SzEvaluator(const CanonicalForm& f, std::uint32_t q)
        : form(f), order(q), result(q) {
        const std::size_t d = form.size();
        tail_min.assign(d + 1, 0);
        for (std::size_t j = d; j-- > 0;)
            tail_min[j] = tail_min[j + 1] + form[j].k * static_cast<std::uint64_t>(d - j);
    }

    const TruncatedSeries& factor(std::uint64_t m, std::uint64_t k) {
        auto key = std::make_pair(m, k);
        auto it = factor_cache.find(key);
        if (it == factor_cache.end())
            it = factor_cache.emplace(key, geometric_power(m, k, order)).first;
        return it->second;
    }

    // acc covers levels 0..j: the chosen factors and the gap binomials up to
    // level j-1; descends over m_{j+1} < m_j, exiting once the accumulated
    // q-order would exceed the truncation
    void descend(std::size_t j, std::uint64_t m_j, std::uint64_t used_order,
                 const TruncatedSeries& acc) {
        const std::size_t d = form.size();
        if (j + 1 == d) {
            const Integer closing = binomial(static_cast<std::int64_t>(m_j) - 1,
                                             static_cast<std::int64_t>(form[j].z));
            if (closing != 0) result += acc.scaled(Rational(closing));
            return;
        }
        const std::uint64_t k_next = form[j + 1].k;
        for (std::uint64_t m_next = d - (j + 1); m_next < m_j; ++m_next) {
            const std::uint64_t next_order = used_order + m_next * k_next;
            if (next_order + tail_min[j + 2] > order) break;
            const Integer gap = binomial(static_cast<std::int64_t>(m_j - m_next) - 1,
                                         static_cast<std::int64_t>(form[j].z));
            if (gap == 0) continue;
            descend(j + 1, m_next, next_order,
                    (acc * factor(m_next, k_next)).scaled(Rational(gap)));
        }
    }

    TruncatedSeries run() {
        const std::size_t d = form.size();
        const std::uint64_t k_first = form[0].k;
        for (std::uint64_t m = d; m * k_first + tail_min[1] <= order; ++m)
            descend(0, m, m * k_first, factor(m, k_first));
        return result;
    }
};

}  // namespace

TruncatedSeries sz(const Word& w, std::uint32_t order) {
    if (!w.is_admissible())
        throw std::domain_error("sz: word '" + w.str() + "' starts with u_0");
    if (w.empty()) return TruncatedSeries::one(order);
    const CanonicalForm form = canonical_form(w);
    return SzEvaluator(form, order).run();
}

TruncatedSeries sz(const LinearCombination& a, std::uint32_t order) {
    TruncatedSeries out(order);
    for (const auto& [w, c] : a.terms()) out += sz(w, order).scaled(c);
    return out;
}

Rational psi(const Word& w, std::uint32_t n) {
    const Rational value = sz(w, n).coefficient(n);
    if (!is_integer(value) || value < 0)
        throw std::logic_error("psi: coefficient of q^" + std::to_string(n) + " for '" +
                               w.str() + "' is not a nonnegative integer");
    return value;
}

}  // namespace qmzv
