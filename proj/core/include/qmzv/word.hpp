#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmzv/rational.hpp"

namespace qmzv {

using Letter = std::uint64_t;

/// Word over the alphabet {u_j : j >= 0}; the empty word is the unit of
/// concatenation. Words compare by length first, then lexicographically on
/// the letter indices; this order drives every piece of deterministic output.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    /// Number of nonzero letter indices.
    std::size_t depth() const;

    /// Sum of the letter indices.
    Letter index_sum() const;

    /// True iff the word is empty or does not start with u_0.
    bool is_admissible() const;

    /// Comma-separated letter indices; empty string for the empty word.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() <=> b.letters_.size();
        return a.letters_ <=> b.letters_;
    }

  private:
    std::vector<Letter> letters_;
};

/// Parses a comma- or whitespace-separated list of nonnegative integers.
/// Empty (or all-whitespace) input yields the empty word. Malformed tokens
/// raise std::invalid_argument naming the offending token.
Word parse_word(std::string_view text);

Word concat(const Word& a, const Word& b);

/// a concatenated with u_j u_0^zeros.
Word concat_tail(const Word& a, Letter j, std::uint64_t zeros);

/// One block of the canonical factorization u_{k1}u_0^{z1}...u_{kd}u_0^{zd}.
struct CanonicalBlock {
    Letter k = 0;           // k >= 1
    std::uint64_t z = 0;    // length of the trailing u_0 run
    friend bool operator==(const CanonicalBlock&, const CanonicalBlock&) = default;
};
using CanonicalForm = std::vector<CanonicalBlock>;

/// Canonical factorization of an admissible word; empty list for the empty
/// word. Throws std::domain_error on non-admissible input.
CanonicalForm canonical_form(const Word& w);

/// Inverse of canonical_form.
Word word_of_canonical_form(const CanonicalForm& form);

/// Decomposition w = prefix . u_j . u_0^trailing_zeros with j >= 1.
struct TailSplit {
    Word prefix;
    Letter j = 0;
    std::uint64_t trailing_zeros = 0;
};

/// Unique tail decomposition of a word of depth >= 1. Throws
/// std::domain_error on depth-0 input.
TailSplit tail_split(const Word& w);

/// All admissible words with length <= max_len and every letter index
/// <= max_index, in the canonical word order.
std::vector<Word> admissible_words(std::size_t max_len, Letter max_index);

/// Finite Q-linear combination of words with exact rational coefficients.
/// Zero coefficients are never stored; terms iterate in the word order.
class LinearCombination {
  public:
    LinearCombination() = default;
    explicit LinearCombination(const Word& w, const Rational& c = 1);

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of w; 0 when absent.
    Rational coefficient_of(const Word& w) const;

    /// Accumulates c * w, erasing the term if the sum cancels.
    void add_term(const Word& w, const Rational& c);

    LinearCombination& operator+=(const LinearCombination& o);
    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
        a += b;
        return a;
    }

    LinearCombination scaled(const Rational& c) const;

    /// Lines "coeff : word" in the word order, denominator omitted when 1.
    std::string str() const;

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

  private:
    std::map<Word, Rational> terms_;
};

}  // namespace qmzv
