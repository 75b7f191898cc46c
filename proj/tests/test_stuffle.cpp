#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qmzv/stuffle.hpp"
#include "test_oracles.hpp"

using namespace qmzv;

namespace {
Word w(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }
}  // namespace

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(5, -2) == 0);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("stuffle base cases") {
    LinearCombination expected(w({1, 1}), 2);
    expected.add_term(w({2}), 1);
    CHECK(stuffle(w({1}), w({1})) == expected);

    CHECK(stuffle(Word(), w({2, 0})) == LinearCombination(w({2, 0})));
    CHECK(stuffle(w({2, 0}), Word()) == LinearCombination(w({2, 0})));

    LinearCombination mixed(w({1}), 1);
    mixed.add_term(w({1, 0}), 1);
    mixed.add_term(w({0, 1}), 1);
    CHECK(stuffle(w({1}), w({0})) == mixed);
}

TEST_CASE("stuffle on combinations is bilinear") {
    LinearCombination a(w({1}), Rational(1, 2));
    a.add_term(w({2}), 3);
    LinearCombination b(w({1}), 2);
    LinearCombination direct = stuffle(a, b);
    LinearCombination expected = stuffle(w({1}), w({1})).scaled(1);
    expected = expected + stuffle(w({2}), w({1})).scaled(6);
    CHECK(direct == expected);
    CHECK(stuffle(LinearCombination(), b).is_zero());
}

TEST_CASE("every product coefficient matches the interleaving count") {
    const auto words = admissible_words(3, 2);
    for (const auto& a : words)
        for (const auto& b : words) {
            const LinearCombination product = stuffle(a, b);
            for (const auto& [word, coeff] : product.terms())
                CHECK(Rational(oracles::interleave_multiplicity(a, b, word)) == coeff);
        }
}

TEST_CASE("pinned multiplicity of u3u0u0u1u0 in u1u0u1u0 * u2u0u0") {
    // the interleaving count fixes the value at 6: the leading letter forces
    // one merge step (1 + 2 = 3) and the remaining letters admit six merges
    const Word a = w({1, 0, 1, 0});
    const Word b = w({2, 0, 0});
    const Word target = w({3, 0, 0, 1, 0});
    CHECK(oracles::interleave_multiplicity(a, b, target) == 6);
    CHECK(multiplicity({a, b, target}) == 6);
    CHECK(multiplicity_recursive({a, b, target}) == 6);
    CHECK(stuffle_block(a, b).coefficient_of(target) == 6);
    CHECK(stuffle_reversed(a, b).coefficient_of(target) == 6);
}

TEST_CASE("stuffle_reversed equals stuffle") {
    CHECK(stuffle_reversed(w({1}), w({1})) == stuffle(w({1}), w({1})));
    CHECK(stuffle_reversed(Word(), w({2, 0})) == LinearCombination(w({2, 0})));
    CHECK(stuffle_reversed(w({1, 0}), w({2})) == stuffle(w({1, 0}), w({2})));
}

TEST_CASE("stuffle_block equals stuffle") {
    CHECK(stuffle_block(w({1, 0}), w({1})) == stuffle(w({1, 0}), w({1})));
    CHECK(stuffle_block(w({1}), w({1})) == stuffle(w({1}), w({1})));
    CHECK(stuffle_block(Word(), w({1, 0})) == LinearCombination(w({1, 0})));
    CHECK(stuffle_block(w({0, 0}), w({1})) == stuffle(w({0, 0}), w({1})));
}

TEST_CASE("three implementations agree exhaustively (small box)") {
    const auto words = admissible_words(3, 2);
    for (const auto& a : words)
        for (const auto& b : words) {
            const LinearCombination front = stuffle(a, b);
            CHECK(stuffle_reversed(a, b) == front);
            CHECK(stuffle_block(a, b) == front);
        }
}

TEST_CASE("commutativity and associativity (small box)") {
    std::vector<Word> words;  // all words, admissible or not
    words.emplace_back();
    for (Letter a = 0; a <= 2; ++a) {
        words.push_back(w({a}));
        for (Letter b = 0; b <= 2; ++b) words.push_back(w({a, b}));
    }
    for (const auto& a : words)
        for (const auto& b : words) CHECK(stuffle(a, b) == stuffle(b, a));

    for (const auto& a : words)
        for (const auto& b : words)
            for (const auto& c : words) {
                const LinearCombination left =
                    stuffle(stuffle(a, b), LinearCombination(c));
                const LinearCombination right =
                    stuffle(LinearCombination(a), stuffle(b, c));
                CHECK(left == right);
            }
}

TEST_CASE("closure and grading") {
    const auto words = admissible_words(3, 2);
    for (const auto& a : words)
        for (const auto& b : words)
            for (const auto& [word, coeff] : stuffle(a, b).terms()) {
                CHECK(word.is_admissible());
                CHECK(word.index_sum() == a.index_sum() + b.index_sum());
                CHECK(word.length() >= std::max(a.length(), b.length()));
                CHECK(word.length() <= a.length() + b.length());
                CHECK(coeff > 0);
                CHECK(is_integer(coeff));
            }
}

TEST_CASE("multiplicity and its recursion") {
    CHECK(multiplicity({Word(), w({2, 0}), w({2, 0})}) == 1);
    CHECK(multiplicity({w({1}), w({1}), w({1, 1})}) == 2);
    CHECK(multiplicity_recursive({Word(), w({2, 0}), w({2, 0})}) == 1);
    CHECK(multiplicity_recursive({w({2, 0}), Word(), w({2, 0})}) == 1);
    CHECK(multiplicity_recursive({w({1}), w({2}), Word()}) == 0);
    CHECK(multiplicity_recursive({Word(), Word(), Word()}) == 1);
    CHECK_THROWS_AS(multiplicity({w({0, 1}), Word(), Word()}), std::domain_error);

    const auto words = admissible_words(3, 2);
    for (const auto& a : words)
        for (const auto& b : words) {
            const LinearCombination product = stuffle(a, b);
            for (const auto& [word, coeff] : product.terms())
                CHECK(Rational(multiplicity_recursive({a, b, word})) == coeff);
            // absent target: right grading, wrong length
            Word absent = concat_tail(concat(a, b), 1, 0);
            if (product.coefficient_of(absent) == 0 && absent.is_admissible())
                CHECK(multiplicity_recursive({a, b, absent}) == 0);
        }
}
