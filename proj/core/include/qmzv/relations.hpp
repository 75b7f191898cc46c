#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmzv/word.hpp"

namespace qmzv {

/// Ordered index of admissible words; the evaluation domain for relation
/// search. Words follow the canonical word order.
struct WordBasis {
    std::vector<Word> words;
    std::map<Word, std::size_t> index;

    bool contains(const Word& w) const { return index.count(w) != 0; }
    std::size_t size() const { return words.size(); }
};

/// All admissible words with length <= max_len and letter indices <= max_index.
WordBasis enumerate_basis(std::size_t max_len, Letter max_index);

/// Dense exact-rational matrix, row-major.
class RationalMatrix {
  public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Exact basis of the right null space via fraction-free row reduction;
/// vectors are normalized to coprime integers with positive leading entry.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

enum class Provenance { kernel_only, duality_generated, stuffle_generated };

/// Rational vector over a word basis whose sz-evaluation vanishes through q^order.
struct RelationCandidate {
    std::vector<Rational> coefficients;
    std::uint32_t order = 0;
    Provenance provenance = Provenance::kernel_only;
};

/// Evaluates sz(w, order) for every basis word, stacks the coefficients into
/// a (order+1) x |basis| matrix and returns its kernel as candidates. Each
/// candidate is re-checked to evaluate to the zero series. Candidates vanish
/// through q^order only; they are evidence, not proven identities.
std::vector<RelationCandidate> discover(std::size_t max_len, Letter max_index,
                                        std::uint32_t order);

/// Relations guaranteed by duality and the stuffle homomorphism inside the
/// basis box: w - tau(w) whenever both words lie in the basis, and
/// differences of stuffle products whose factors are duality images of each
/// other (both products rewrite the same series into the basis). Returns a
/// linearly independent generating set.
std::vector<RelationCandidate> known_span(std::size_t max_len, Letter max_index,
                                          std::uint32_t order);

struct CompareReport {
    std::size_t dim_kernel = 0;
    std::size_t dim_known = 0;
    bool containment = false;  // known span inside the discovered kernel
};

CompareReport compare(std::size_t max_len, Letter max_index, std::uint32_t order);

/// "provenance | c1·w1 + c2·w2 - ..." with coefficients in lowest terms and
/// positive leading coefficient; words use the word text format.
std::string relation_line(const RelationCandidate& candidate, const WordBasis& basis);

}  // namespace qmzv
