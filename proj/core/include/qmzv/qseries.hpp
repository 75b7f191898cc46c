#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmzv/word.hpp"

namespace qmzv {

/// Exact rational coefficients of q^0 .. q^order. Arithmetic requires equal
/// order on both sides and truncates products at the order.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::uint32_t order)
        : order_(order), coeffs_(static_cast<std::size_t>(order) + 1, Rational(0)) {}

    static TruncatedSeries one(std::uint32_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::uint32_t order() const { return order_; }
    const Rational& coefficient(std::uint32_t n) const { return coeffs_.at(n); }
    void set_coefficient(std::uint32_t n, Rational c) { coeffs_.at(n) = std::move(c); }

    bool is_zero() const;

    /// Lines "N: coeff" for N = 0..order, denominator omitted when 1.
    std::string str() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries scaled(const Rational& c) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    std::uint32_t order_;
    std::vector<Rational> coeffs_;
};

/// q-expansion of an admissible word through q^order:
///   sz(u_{k1}u_0^{z1}...u_{kd}u_0^{zd})
///     = sum_{m1>...>md>0} prod_j binom(m_j - m_{j+1} - 1, z_j)
///                                q^{m_j k_j} / (1 - q^{m_j})^{k_j}
/// with m_{d+1} = 0 and sz(1) = 1. Every summand has q-order at least m_1, so
/// restricting the outer sum to m_1 <= order loses nothing. Throws
/// std::domain_error on non-admissible input.
TruncatedSeries sz(const Word& w, std::uint32_t order);

/// Linear extension of sz to combinations of admissible words.
TruncatedSeries sz(const LinearCombination& a, std::uint32_t order);

/// N-th Fourier coefficient of sz(w); a nonnegative integer for admissible w.
Rational psi(const Word& w, std::uint32_t n);

}  // namespace qmzv
