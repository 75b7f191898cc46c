#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qmzv/word.hpp"

using namespace qmzv;

namespace {
Word w(std::initializer_list<Letter> letters) { return Word(std::vector<Letter>(letters)); }
}  // namespace

TEST_CASE("parse_word") {
    CHECK(parse_word("2,0,0,1,1,0") == w({2, 0, 0, 1, 1, 0}));
    CHECK(parse_word("") == Word());
    CHECK(parse_word("   ") == Word());
    CHECK(parse_word("1 0 1 0") == w({1, 0, 1, 0}));
    CHECK(parse_word("1, 0,\t2") == w({1, 0, 2}));

    CHECK_THROWS_AS(parse_word("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1,x,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1,"), std::invalid_argument);
    CHECK_THROWS_WITH(parse_word("1,zz"), doctest::Contains("'zz'"));
}

TEST_CASE("concat and identities") {
    CHECK(concat(w({1}), w({0, 1})) == w({1, 0, 1}));
    CHECK(concat(Word(), w({2, 0})) == w({2, 0}));
    CHECK(concat(w({2, 0}), Word()) == w({2, 0}));
    CHECK(concat_tail(w({1, 0}), 3, 2) == w({1, 0, 3, 0, 0}));
}

TEST_CASE("length, depth, admissibility") {
    CHECK(w({2, 0, 0, 1, 1, 0}).length() == 6);
    CHECK(Word().length() == 0);
    CHECK(w({1}).length() == 1);

    CHECK(w({2, 0, 0, 1, 1, 0}).depth() == 3);
    CHECK(Word().depth() == 0);
    CHECK(w({0, 0}).depth() == 0);

    CHECK(w({2, 0, 1}).is_admissible());
    CHECK_FALSE(w({0, 1}).is_admissible());
    CHECK(Word().is_admissible());

    CHECK(w({2, 0, 0, 1, 1, 0}).index_sum() == 4);
}

TEST_CASE("canonical form") {
    const CanonicalForm expected = {{2, 2}, {1, 0}, {1, 1}};
    CHECK(canonical_form(w({2, 0, 0, 1, 1, 0})) == expected);
    CHECK(canonical_form(Word()) == CanonicalForm{});
    CHECK(canonical_form(w({3, 0, 0, 1, 0})) == CanonicalForm{{3, 2}, {1, 1}});
    CHECK_THROWS_AS(canonical_form(w({0, 1})), std::domain_error);

    for (const auto& word : admissible_words(5, 3))
        CHECK(word_of_canonical_form(canonical_form(word)) == word);
}

TEST_CASE("tail split") {
    auto split = tail_split(w({2, 0, 0, 1, 1, 0}));
    CHECK(split.prefix == w({2, 0, 0, 1}));
    CHECK(split.j == 1);
    CHECK(split.trailing_zeros == 1);

    split = tail_split(w({1}));
    CHECK(split.prefix == Word());
    CHECK(split.j == 1);
    CHECK(split.trailing_zeros == 0);

    split = tail_split(w({1, 0, 1, 0}));
    CHECK(split.prefix == w({1, 0}));
    CHECK(split.j == 1);
    CHECK(split.trailing_zeros == 1);

    CHECK_THROWS_AS(tail_split(Word()), std::domain_error);
    CHECK_THROWS_AS(tail_split(w({0, 0})), std::domain_error);

    for (const auto& word : admissible_words(5, 3)) {
        if (word.depth() == 0) continue;
        const auto s = tail_split(word);
        CHECK(s.j >= 1);
        CHECK(s.prefix.is_admissible());
        CHECK(concat_tail(s.prefix, s.j, s.trailing_zeros) == word);
    }
}

TEST_CASE("word text format round trip") {
    CHECK(w({1, 0, 1, 0}).str() == "1,0,1,0");
    CHECK(Word().str().empty());
    for (const auto& word : admissible_words(5, 3)) CHECK(parse_word(word.str()) == word);
}

TEST_CASE("depth bounded by length") {
    for (const auto& word : admissible_words(5, 3)) {
        CHECK(word.depth() <= word.length());
        const bool no_zero =
            std::none_of(word.letters().begin(), word.letters().end(),
                         [](Letter j) { return j == 0; });
        CHECK((word.depth() == word.length()) == no_zero);
    }
}

TEST_CASE("word order sorts by length then lexicographically") {
    CHECK(w({2}) < w({1, 1}));
    CHECK(w({1, 0}) < w({1, 1}));
    CHECK(w({1, 3}) < w({2, 0}));
    CHECK(Word() < w({1}));

    const auto words = admissible_words(2, 1);
    CHECK(words == std::vector<Word>{Word(), w({1}), w({1, 0}), w({1, 1})});
    CHECK(admissible_words(1, 2) == std::vector<Word>{Word(), w({1}), w({2})});
    CHECK(admissible_words(0, 7) == std::vector<Word>{Word()});
    CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("linear combinations") {
    LinearCombination x(w({1, 1}), 2);
    x.add_term(w({2}), 1);
    CHECK(x.coefficient_of(w({2})) == 1);
    CHECK(x.coefficient_of(w({1, 1})) == 2);
    CHECK(x.coefficient_of(w({3})) == 0);

    CHECK((x + x.scaled(-1)).is_zero());
    CHECK(x.scaled(0).is_zero());
    CHECK(x.scaled(Rational(1, 2)).coefficient_of(w({1, 1})) == 1);

    // terms print in the word order, shorter words first
    CHECK(x.str() == "1 : 2\n2 : 1,1\n");
    LinearCombination with_empty(Word(), Rational(3, 2));
    CHECK(with_empty.str() == "3/2 : \n");

    LinearCombination cancel;
    cancel.add_term(w({1}), Rational(1, 3));
    cancel.add_term(w({1}), Rational(-1, 3));
    CHECK(cancel.is_zero());
    CHECK(cancel == LinearCombination());
}
