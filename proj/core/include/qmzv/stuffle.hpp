#pragma once

#include <cstdint>

#include "qmzv/word.hpp"

namespace qmzv {

/// Binomial coefficient; 0 whenever the arguments fall outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

/// Schlesinger-Zudilin stuffle product, computed by the front recursion
///   u_{j1}W1 * u_{j2}W2 = u_{j1}(W1 * u_{j2}W2)
///                       + u_{j2}(u_{j1}W1 * W2)
///                       + u_{j1+j2}(W1 * W2)
/// with the empty word as unit. Word-pair products are memoized process-wide
/// under a sorted pair key; the table is safe to share between threads.
LinearCombination stuffle(const Word& a, const Word& b);

/// Bilinear extension to combinations.
LinearCombination stuffle(const LinearCombination& a, const LinearCombination& b);

/// Same product, computed by peeling the last letter:
///   W1 u_{j1} * W2 u_{j2} = (W1 * W2 u_{j2}) u_{j1}
///                         + (W1 u_{j1} * W2) u_{j2}
///                         + (W1 * W2) u_{j1+j2}.
LinearCombination stuffle_reversed(const Word& a, const Word& b);

/// Same product, computed by the block recursion on tails u_j u_0^n: three
/// binomial-weighted sums over (k, j, eps) that recurse on shorter words.
/// Inputs of depth 0 fall through to the front recursion.
LinearCombination stuffle_block(const Word& a, const Word& b);

struct MultiplicityQuery {
    Word w1, w2, target;
};

/// Coefficient of target in w1 * w2, extracted from the front recursion.
/// Always a nonnegative integer for word inputs.
Integer multiplicity(const MultiplicityQuery& q);

/// Same number via the tail recursion with Kronecker deltas: the three
/// boundary cases for empty words, and otherwise three binomial sums over the
/// tail data of w1, w2 and target.
Integer multiplicity_recursive(const MultiplicityQuery& q);

}  // namespace qmzv
