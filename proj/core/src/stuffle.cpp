#include "qmzv/stuffle.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace qmzv {

namespace {

// Word pairs up to this combined length are memoized process-wide. Larger
// products are recomputed from the cached tails, which keeps the table small
// while the exhaustive checks still hit it for every recursive subproduct.
constexpr std::size_t kMemoMaxTotalLength = 6;

std::map<std::pair<Word, Word>, LinearCombination>& memo_table() {
    static std::map<std::pair<Word, Word>, LinearCombination> table;
    return table;
}

std::mutex& memo_mutex() {
    static std::mutex mx;
    return mx;
}

Word drop_front(const Word& w) {
    return Word(std::vector<Letter>(w.letters().begin() + 1, w.letters().end()));
}

Word drop_back(const Word& w) {
    return Word(std::vector<Letter>(w.letters().begin(), w.letters().end() - 1));
}

Word prepend(Letter j, const Word& w) {
    std::vector<Letter> letters;
    letters.reserve(w.length() + 1);
    letters.push_back(j);
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    return Word(std::move(letters));
}

Word append(const Word& w, Letter j) {
    std::vector<Letter> letters = w.letters();
    letters.push_back(j);
    return Word(std::move(letters));
}

void add_prepended(LinearCombination& dst, Letter j, const LinearCombination& src) {
    for (const auto& [w, c] : src.terms()) dst.add_term(prepend(j, w), c);
}

void add_appended(LinearCombination& dst, const LinearCombination& src, Letter j) {
    for (const auto& [w, c] : src.terms()) dst.add_term(append(w, j), c);
}

}  // namespace

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

LinearCombination stuffle(const Word& a, const Word& b) {
    if (a.empty()) return LinearCombination(b);
    if (b.empty()) return LinearCombination(a);

    std::pair<Word, Word> key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    {
        std::lock_guard lock(memo_mutex());
        auto it = memo_table().find(key);
        if (it != memo_table().end()) return it->second;
    }

    const Letter j1 = a[0];
    const Letter j2 = b[0];
    const Word ta = drop_front(a);
    const Word tb = drop_front(b);

    LinearCombination result;
    add_prepended(result, j1, stuffle(ta, b));
    add_prepended(result, j2, stuffle(a, tb));
    add_prepended(result, j1 + j2, stuffle(ta, tb));

    if (a.length() + b.length() <= kMemoMaxTotalLength) {
        std::lock_guard lock(memo_mutex());
        memo_table().emplace(std::move(key), result);
    }
    return result;
}

LinearCombination stuffle(const LinearCombination& a, const LinearCombination& b) {
    LinearCombination result;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            const Rational scale = ca * cb;
            for (const auto& [w, c] : stuffle(wa, wb).terms()) result.add_term(w, c * scale);
        }
    return result;
}

namespace {

LinearCombination stuffle_reversed_rec(
    const Word& a, const Word& b, std::size_t la, std::size_t lb,
    std::vector<std::vector<LinearCombination>>& memo,
    std::vector<std::vector<bool>>& seen) {
    if (seen[la][lb]) return memo[la][lb];
    LinearCombination result;
    if (la == 0) {
        result = LinearCombination(
            Word(std::vector<Letter>(b.letters().begin(),
                                     b.letters().begin() + static_cast<std::ptrdiff_t>(lb))));
    } else if (lb == 0) {
        result = LinearCombination(
            Word(std::vector<Letter>(a.letters().begin(),
                                     a.letters().begin() + static_cast<std::ptrdiff_t>(la))));
    } else {
        const Letter j1 = a[la - 1];
        const Letter j2 = b[lb - 1];
        add_appended(result, stuffle_reversed_rec(a, b, la - 1, lb, memo, seen), j1);
        add_appended(result, stuffle_reversed_rec(a, b, la, lb - 1, memo, seen), j2);
        add_appended(result, stuffle_reversed_rec(a, b, la - 1, lb - 1, memo, seen), j1 + j2);
    }
    memo[la][lb] = result;
    seen[la][lb] = true;
    return result;
}

}  // namespace

LinearCombination stuffle_reversed(const Word& a, const Word& b) {
    // subproducts are prefix pairs, so (length, length) indexes the memo
    std::vector memo(a.length() + 1, std::vector<LinearCombination>(b.length() + 1));
    std::vector seen(a.length() + 1, std::vector<bool>(b.length() + 1, false));
    return stuffle_reversed_rec(a, b, a.length(), b.length(), memo, seen);
}

namespace {

LinearCombination stuffle_block_rec(const Word& a, const Word& b,
                                    std::map<std::pair<Word, Word>, LinearCombination>& memo) {
    if (a.depth() == 0 || b.depth() == 0) return stuffle(a, b);

    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const TailSplit sa = tail_split(a);
    const TailSplit sb = tail_split(b);
    const std::uint64_t n1 = sa.trailing_zeros;
    const std::uint64_t n2 = sb.trailing_zeros;

    LinearCombination result;

    // sum over (k, j, eps): subproduct appended with u_{j1} u_0^{n1+k}
    for (std::uint64_t j = 0; j <= n2; ++j)
        for (std::uint64_t k = 0; k <= j; ++k)
            for (std::uint64_t eps = 0; eps <= std::min<std::uint64_t>(1, n2 - j); ++eps) {
                const Integer c = binomial(static_cast<std::int64_t>(n1 + k),
                                           static_cast<std::int64_t>(n1)) *
                                  binomial(static_cast<std::int64_t>(n1),
                                           static_cast<std::int64_t>(j - k));
                if (c == 0) continue;
                const LinearCombination sub = stuffle_block_rec(
                    sa.prefix, concat_tail(sb.prefix, sb.j, n2 - j - eps), memo);
                for (const auto& [w, q] : sub.terms())
                    result.add_term(concat_tail(w, sa.j, n1 + k), q * Rational(c));
            }

    // mirrored sum: subproduct appended with u_{j2} u_0^{n2+k}
    for (std::uint64_t j = 0; j <= n1; ++j)
        for (std::uint64_t k = 0; k <= j; ++k)
            for (std::uint64_t eps = 0; eps <= std::min<std::uint64_t>(1, n1 - j); ++eps) {
                const Integer c = binomial(static_cast<std::int64_t>(n2 + k),
                                           static_cast<std::int64_t>(n2)) *
                                  binomial(static_cast<std::int64_t>(n2),
                                           static_cast<std::int64_t>(j - k));
                if (c == 0) continue;
                const LinearCombination sub = stuffle_block_rec(
                    concat_tail(sa.prefix, sa.j, n1 - j - eps), sb.prefix, memo);
                for (const auto& [w, q] : sub.terms())
                    result.add_term(concat_tail(w, sb.j, n2 + k), q * Rational(c));
            }

    // merge sum: subproduct appended with u_{j1+j2} u_0^{n1+k}
    for (std::uint64_t k = 0; k <= n2; ++k) {
        const Integer c =
            binomial(static_cast<std::int64_t>(n1 + k), static_cast<std::int64_t>(n1)) *
            binomial(static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2 - k));
        if (c == 0) continue;
        const LinearCombination sub = stuffle_block_rec(sa.prefix, sb.prefix, memo);
        for (const auto& [w, q] : sub.terms())
            result.add_term(concat_tail(w, sa.j + sb.j, n1 + k), q * Rational(c));
    }

    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

LinearCombination stuffle_block(const Word& a, const Word& b) {
    std::map<std::pair<Word, Word>, LinearCombination> memo;
    return stuffle_block_rec(a, b, memo);
}

Integer multiplicity(const MultiplicityQuery& q) {
    if (!q.w1.is_admissible() || !q.w2.is_admissible() || !q.target.is_admissible())
        throw std::domain_error("multiplicity: all three words must be admissible");
    return to_integer(stuffle(q.w1, q.w2).coefficient_of(q.target));
}

namespace {

Integer multiplicity_rec(const Word& w1, const Word& w2, const Word& w,
                         std::map<std::tuple<Word, Word, Word>, Integer>& memo) {
    if (w1.empty()) return w == w2 ? 1 : 0;
    if (w2.empty()) return w == w1 ? 1 : 0;
    if (w.empty()) return 0;  // w1, w2 nonempty here

    auto key = std::make_tuple(w1, w2, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const TailSplit s1 = tail_split(w1);
    const TailSplit s2 = tail_split(w2);
    const TailSplit s3 = tail_split(w);
    const std::uint64_t n1 = s1.trailing_zeros;
    const std::uint64_t n2 = s2.trailing_zeros;
    const std::uint64_t n3 = s3.trailing_zeros;

    Integer total = 0;

    // delta j1 = j3, n1 + k = n3 pins k in the first sum
    if (s1.j == s3.j && n3 >= n1 && n3 - n1 <= n2) {
        const std::uint64_t k = n3 - n1;
        for (std::uint64_t j = k; j <= n2; ++j)
            for (std::uint64_t eps = 0; eps <= std::min<std::uint64_t>(1, n2 - j); ++eps) {
                const Integer c = binomial(static_cast<std::int64_t>(n1 + k),
                                           static_cast<std::int64_t>(n1)) *
                                  binomial(static_cast<std::int64_t>(n1),
                                           static_cast<std::int64_t>(j - k));
                if (c == 0) continue;
                total += c * multiplicity_rec(
                                 s1.prefix, concat_tail(s2.prefix, s2.j, n2 - j - eps),
                                 s3.prefix, memo);
            }
    }

    // delta j2 = j3, n2 + k = n3
    if (s2.j == s3.j && n3 >= n2 && n3 - n2 <= n1) {
        const std::uint64_t k = n3 - n2;
        for (std::uint64_t j = k; j <= n1; ++j)
            for (std::uint64_t eps = 0; eps <= std::min<std::uint64_t>(1, n1 - j); ++eps) {
                const Integer c = binomial(static_cast<std::int64_t>(n2 + k),
                                           static_cast<std::int64_t>(n2)) *
                                  binomial(static_cast<std::int64_t>(n2),
                                           static_cast<std::int64_t>(j - k));
                if (c == 0) continue;
                total += c * multiplicity_rec(
                                 concat_tail(s1.prefix, s1.j, n1 - j - eps), s2.prefix,
                                 s3.prefix, memo);
            }
    }

    // delta j1 + j2 = j3, n1 + k = n3
    if (s1.j + s2.j == s3.j && n3 >= n1 && n3 - n1 <= n2) {
        const std::uint64_t k = n3 - n1;
        const Integer c =
            binomial(static_cast<std::int64_t>(n1 + k), static_cast<std::int64_t>(n1)) *
            binomial(static_cast<std::int64_t>(n1), static_cast<std::int64_t>(n2 - k));
        if (c != 0) total += c * multiplicity_rec(s1.prefix, s2.prefix, s3.prefix, memo);
    }

    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Integer multiplicity_recursive(const MultiplicityQuery& q) {
    if (!q.w1.is_admissible() || !q.w2.is_admissible() || !q.target.is_admissible())
        throw std::domain_error("multiplicity_recursive: all three words must be admissible");
    std::map<std::tuple<Word, Word, Word>, Integer> memo;
    return multiplicity_rec(q.w1, q.w2, q.target, memo);
}

}  // namespace qmzv
