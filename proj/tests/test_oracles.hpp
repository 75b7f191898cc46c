#pragma once

// Independent oracles shared by the test suites. Everything here recomputes
// expected values from first principles, away from the implementation paths
// under test.

#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "qmzv/stuffle.hpp"
#include "qmzv/word.hpp"

namespace qmzv::oracles {

// Coefficient of target in a * b counted directly: a merge word consumes one
// letter of a, one letter of b, or one of each (indices added) per step.
inline Integer interleave_multiplicity(const Word& a, const Word& b, const Word& target) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Integer> memo;
    std::function<Integer(std::size_t, std::size_t, std::size_t)> count =
        [&](std::size_t i, std::size_t j, std::size_t k) -> Integer {
        if (k == target.length())
            return i == a.length() && j == b.length() ? 1 : 0;
        const auto key = std::make_tuple(i, j, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer total = 0;
        if (i < a.length() && a[i] == target[k]) total += count(i + 1, j, k + 1);
        if (j < b.length() && b[j] == target[k]) total += count(i, j + 1, k + 1);
        if (i < a.length() && j < b.length() && a[i] + b[j] == target[k])
            total += count(i + 1, j + 1, k + 1);
        memo.emplace(key, total);
        return total;
    };
    return count(0, 0, 0);
}

// Number of divisors of n.
inline std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) ++count;
    return count;
}

// Marked-partition census as a binomial sum: over shapes with distinct parts
// m_1 > ... > m_d >= 1 and multiplicities n_j >= 1 summing to n,
//   prod_j binom(n_j - 1, k_j - 1) * binom(m_j - m_{j+1} - 1, z_j)
// with m_{d+1} = 0 and (k_j, z_j) the canonical form of the type word. Row
// and column mark placements are counted by the binomials instead of being
// materialized.
inline Integer census_formula(const Word& w, std::uint64_t n) {
    if (w.empty()) return n == 0 ? 1 : 0;
    const CanonicalForm form = canonical_form(w);
    const std::size_t d = form.size();
    std::vector<std::uint64_t> part(d), mult(d);
    Integer total = 0;
    std::function<void(std::size_t, std::uint64_t)> choose = [&](std::size_t level,
                                                                 std::uint64_t remaining) {
        if (level == d) {
            if (remaining != 0) return;
            Integer product = 1;
            for (std::size_t j = 0; j < d && product != 0; ++j) {
                const std::uint64_t next = j + 1 < d ? part[j + 1] : 0;
                product *= binomial(static_cast<std::int64_t>(mult[j]) - 1,
                                    static_cast<std::int64_t>(form[j].k) - 1);
                product *= binomial(static_cast<std::int64_t>(part[j] - next) - 1,
                                    static_cast<std::int64_t>(form[j].z));
            }
            total += product;
            return;
        }
        const std::uint64_t upper = level == 0 ? remaining : part[level - 1] - 1;
        for (part[level] = 1; part[level] <= upper; ++part[level])
            for (mult[level] = 1; part[level] * mult[level] <= remaining; ++mult[level])
                choose(level + 1, remaining - part[level] * mult[level]);
    };
    choose(0, n);
    return total;
}

}  // namespace qmzv::oracles
