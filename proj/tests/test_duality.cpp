#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qmzv/duality.hpp"
#include "qmzv/qseries.hpp"

using namespace qmzv;

namespace {
Word w(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }
}  // namespace

TEST_CASE("tau on words") {
    CHECK(tau(Word()) == Word());
    CHECK(tau(w({2, 0, 0, 1, 1, 0})) == w({2, 1, 3, 0}));
    CHECK(tau(w({3})) == w({1, 0, 0}));
    CHECK(tau(w({1})) == w({1}));
    CHECK(tau(w({2, 0})) == w({2, 0}));
    CHECK_THROWS_AS(tau(w({0, 1})), std::domain_error);
}

TEST_CASE("tau_lin") {
    LinearCombination a(w({2}), 2);
    a.add_term(w({1, 0}), 1);
    LinearCombination expected(w({1, 0}), 2);
    expected.add_term(w({2}), 1);
    CHECK(tau_lin(a) == expected);

    CHECK(tau_lin(LinearCombination()).is_zero());
    CHECK(tau_lin(LinearCombination(Word())) == LinearCombination(Word()));
    CHECK_THROWS_AS(tau_lin(LinearCombination(w({0, 1}))), std::domain_error);
}

TEST_CASE("tau is an involution") {
    for (const auto& word : admissible_words(6, 4)) CHECK(tau(tau(word)) == word);
}

TEST_CASE("tau swaps length and index sum") {
    for (const auto& word : admissible_words(6, 4)) {
        if (word.empty()) continue;
        const Word dual = tau(word);
        CHECK(dual.length() == word.index_sum());
        CHECK(dual.index_sum() == word.length());
        CHECK(dual.depth() == word.depth());
        CHECK(dual.is_admissible());
    }
}

TEST_CASE("sz is tau-invariant (small box)") {
    for (const auto& word : admissible_words(3, 2))
        CHECK(sz(tau(word), 20) == sz(word, 20));
}
