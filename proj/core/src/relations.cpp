#include "qmzv/relations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qmzv/duality.hpp"
#include "qmzv/qseries.hpp"
#include "qmzv/stuffle.hpp"

namespace qmzv {

WordBasis enumerate_basis(std::size_t max_len, Letter max_index) {
    WordBasis basis;
    basis.words = admissible_words(max_len, max_index);
    for (std::size_t i = 0; i < basis.words.size(); ++i) basis.index.emplace(basis.words[i], i);
    return basis;
}

namespace {

// scale to coprime integer entries with positive leading coefficient
void normalize_vector(std::vector<Rational>& v) {
    Integer den_lcm = 1;
    for (const auto& c : v)
        if (c != 0) den_lcm = lcm(den_lcm, denominator(c));
    Integer num_gcd = 0;
    for (auto& c : v) {
        if (c == 0) continue;
        c *= den_lcm;
        num_gcd = gcd(num_gcd, numerator(c));
    }
    if (num_gcd == 0) return;
    for (auto& c : v)
        if (c != 0) c /= num_gcd;
    for (const auto& c : v) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& x : v) x = -x;
        break;
    }
}

Integer exact_div(const Integer& num, const Integer& den) {
    if (num % den != 0)
        throw std::logic_error("fraction-free elimination produced a non-exact division");
    return num / den;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // clear denominators row by row; row scaling leaves the kernel unchanged
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer den_lcm = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (m.at(r, c) != 0) den_lcm = lcm(den_lcm, denominator(m.at(r, c)));
        for (std::size_t c = 0; c < cols; ++c)
            a[r][c] = numerator(m.at(r, c) * Rational(den_lcm));
    }

    // Bareiss: fraction-free echelon form, dividing by the previous pivot
    std::vector<std::size_t> pivot_cols;
    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = exact_div(a[rank][col] * a[i][j] - a[i][col] * a[rank][j], prev);
            a[i][col] = 0;
        }
        prev = a[rank][col];
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> kernel;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = rank; i-- > 0;) {
            const std::size_t pc = pivot_cols[i];
            // rows whose pivot sits right of the free column only involve
            // entries that stay zero
            if (pc > free_col) continue;
            Rational sum = 0;
            for (std::size_t c = pc + 1; c < cols; ++c)
                if (v[c] != 0 && a[i][c] != 0) sum += Rational(a[i][c]) * v[c];
            v[pc] = -sum / Rational(a[i][pc]);
        }
        normalize_vector(v);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

namespace {

RationalMatrix evaluation_matrix(const WordBasis& basis, std::uint32_t order) {
    RationalMatrix m(static_cast<std::size_t>(order) + 1, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const TruncatedSeries series = sz(basis.words[i], order);
        for (std::uint32_t n = 0; n <= order; ++n) m.at(n, i) = series.coefficient(n);
    }
    return m;
}

bool in_kernel(const RationalMatrix& m, const std::vector<Rational>& v) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational sum = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (v[c] != 0 && m.at(r, c) != 0) sum += m.at(r, c) * v[c];
        if (sum != 0) return false;
    }
    return true;
}

// incremental rational elimination used to keep independent generators only
struct RankFilter {
    std::vector<std::vector<Rational>> echelon;  // reduced rows, by leading index

    bool add(std::vector<Rational> v) {
        for (const auto& row : echelon) {
            std::size_t lead = 0;
            while (lead < row.size() && row[lead] == 0) ++lead;
            if (lead < v.size() && v[lead] != 0) {
                const Rational factor = v[lead] / row[lead];
                for (std::size_t c = lead; c < v.size(); ++c) v[c] -= factor * row[c];
            }
        }
        if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; }))
            return false;
        echelon.push_back(std::move(v));
        std::sort(echelon.begin(), echelon.end(),
                  [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
                      std::size_t lx = 0, ly = 0;
                      while (lx < x.size() && x[lx] == 0) ++lx;
                      while (ly < y.size() && y[ly] == 0) ++ly;
                      return lx < ly;
                  });
        return true;
    }
};

bool combination_in_basis(const LinearCombination& lc, const WordBasis& basis) {
    return std::all_of(lc.terms().begin(), lc.terms().end(),
                       [&](const auto& term) { return basis.contains(term.first); });
}

std::vector<Rational> difference_vector(const LinearCombination& plus,
                                        const LinearCombination& minus,
                                        const WordBasis& basis) {
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [w, c] : plus.terms()) v[basis.index.at(w)] += c;
    for (const auto& [w, c] : minus.terms()) v[basis.index.at(w)] -= c;
    return v;
}

}  // namespace

std::vector<RelationCandidate> discover(std::size_t max_len, Letter max_index,
                                        std::uint32_t order) {
    const WordBasis basis = enumerate_basis(max_len, max_index);
    const RationalMatrix m = evaluation_matrix(basis, order);
    std::vector<RelationCandidate> out;
    for (auto& v : kernel_basis(m)) {
        LinearCombination lc;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v[i] != 0) lc.add_term(basis.words[i], v[i]);
        if (!sz(lc, order).is_zero())
            throw std::logic_error("discover: kernel vector fails the series re-check");
        out.push_back({std::move(v), order, Provenance::kernel_only});
    }
    return out;
}

std::vector<RelationCandidate> known_span(std::size_t max_len, Letter max_index,
                                          std::uint32_t order) {
    const WordBasis basis = enumerate_basis(max_len, max_index);
    std::vector<RelationCandidate> out;
    RankFilter filter;

    auto try_add = [&](std::vector<Rational> v, Provenance provenance) {
        normalize_vector(v);
        if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; })) return;
        if (!filter.add(v)) return;
        out.push_back({std::move(v), order, provenance});
    };

    // duality: w - tau(w) whenever both endpoints lie in the box
    for (const auto& w : basis.words) {
        if (w.empty()) continue;
        const Word t = tau(w);
        if (w < t && basis.contains(t)) {
            std::vector<Rational> v(basis.size(), Rational(0));
            v[basis.index.at(w)] = 1;
            v[basis.index.at(t)] = -1;
            try_add(std::move(v), Provenance::duality_generated);
        }
    }

    // stuffle: both products rewrite the same series sz(a)sz(b) into the
    // basis, so their difference is a relation
    for (std::size_t i = 0; i < basis.words.size(); ++i) {
        for (std::size_t j = i; j < basis.words.size(); ++j) {
            const Word& a = basis.words[i];
            const Word& b = basis.words[j];
            if (a.empty() || b.empty()) continue;
            const LinearCombination base = stuffle(a, b);
            if (!combination_in_basis(base, basis)) continue;
            const Word ta = tau(a);
            const Word tb = tau(b);
            std::vector<std::pair<Word, Word>> variants = {{ta, b}, {a, tb}, {ta, tb}};
            for (const auto& [va, vb] : variants) {
                if (!basis.contains(va) || !basis.contains(vb)) continue;
                if (std::minmax(va, vb) == std::minmax(a, b)) continue;
                const LinearCombination alt = stuffle(va, vb);
                if (!combination_in_basis(alt, basis)) continue;
                try_add(difference_vector(alt, base, basis),
                        Provenance::stuffle_generated);
            }
        }
    }
    return out;
}

CompareReport compare(std::size_t max_len, Letter max_index, std::uint32_t order) {
    const WordBasis basis = enumerate_basis(max_len, max_index);
    const RationalMatrix m = evaluation_matrix(basis, order);
    CompareReport report;
    report.dim_kernel = kernel_basis(m).size();
    const auto known = known_span(max_len, max_index, order);
    report.dim_known = known.size();
    report.containment = std::all_of(known.begin(), known.end(), [&](const RelationCandidate& c) {
        return in_kernel(m, c.coefficients);
    });
    return report;
}

std::string relation_line(const RelationCandidate& candidate, const WordBasis& basis) {
    const char* provenance = candidate.provenance == Provenance::kernel_only ? "kernel-only"
                             : candidate.provenance == Provenance::duality_generated
                                 ? "duality"
                                 : "stuffle";
    std::vector<Rational> v = candidate.coefficients;
    normalize_vector(v);  // leading coefficient positive, entries coprime
    std::string out = std::string(provenance) + " |";
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        if (first) {
            out += ' ';
            first = false;
        } else {
            out += c > 0 ? " + " : " - ";
            if (c < 0) c = -c;
        }
        out += rational_str(c);
        out += "·";
        out += basis.words[i].str();
    }
    return out;
}

}  // namespace qmzv
