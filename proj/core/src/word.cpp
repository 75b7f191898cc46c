#include "qmzv/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qmzv {

std::size_t Word::depth() const {
    return static_cast<std::size_t>(
        std::count_if(letters_.begin(), letters_.end(), [](Letter j) { return j != 0; }));
}

Letter Word::index_sum() const {
    Letter s = 0;
    for (Letter j : letters_) s += j;
    return s;
}

bool Word::is_admissible() const { return letters_.empty() || letters_.front() != 0; }

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

Word parse_word(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    auto is_sep = [](char c) {
        return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
    };
    bool token_expected = false;  // after a comma a token must follow
    while (i < text.size()) {
        while (i < text.size() && is_sep(text[i])) {
            if (text[i] == ',') {
                if (token_expected)
                    throw std::invalid_argument("word parse error: empty token between commas");
                token_expected = true;
            }
            ++i;
        }
        if (i == text.size()) break;
        std::size_t start = i;
        while (i < text.size() && !is_sep(text[i])) ++i;
        std::string_view tok = text.substr(start, i - start);
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("word parse error: invalid letter token '" +
                                        std::string(tok) + "'");
        letters.push_back(value);
        token_expected = false;
    }
    if (token_expected)
        throw std::invalid_argument("word parse error: trailing comma");
    return Word(std::move(letters));
}

Word concat(const Word& a, const Word& b) {
    std::vector<Letter> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(letters));
}

Word concat_tail(const Word& a, Letter j, std::uint64_t zeros) {
    std::vector<Letter> letters = a.letters();
    letters.reserve(letters.size() + 1 + zeros);
    letters.push_back(j);
    letters.insert(letters.end(), zeros, Letter{0});
    return Word(std::move(letters));
}

CanonicalForm canonical_form(const Word& w) {
    if (!w.is_admissible())
        throw std::domain_error("canonical_form: word '" + w.str() + "' starts with u_0");
    CanonicalForm form;
    const auto& letters = w.letters();
    std::size_t i = 0;
    while (i < letters.size()) {
        CanonicalBlock block;
        block.k = letters[i++];
        while (i < letters.size() && letters[i] == 0) {
            ++block.z;
            ++i;
        }
        form.push_back(block);
    }
    return form;
}

Word word_of_canonical_form(const CanonicalForm& form) {
    std::vector<Letter> letters;
    for (const auto& block : form) {
        letters.push_back(block.k);
        letters.insert(letters.end(), block.z, Letter{0});
    }
    return Word(std::move(letters));
}

TailSplit tail_split(const Word& w) {
    const auto& letters = w.letters();
    auto it = std::find_if(letters.rbegin(), letters.rend(), [](Letter j) { return j != 0; });
    if (it == letters.rend())
        throw std::domain_error("tail_split: word '" + w.str() + "' has depth 0");
    std::size_t pos = letters.size() - 1 - static_cast<std::size_t>(it - letters.rbegin());
    TailSplit split;
    split.prefix = Word(std::vector<Letter>(letters.begin(), letters.begin() + pos));
    split.j = letters[pos];
    split.trailing_zeros = letters.size() - pos - 1;
    return split;
}

std::vector<Word> admissible_words(std::size_t max_len, Letter max_index) {
    std::vector<Word> words;
    words.emplace_back();
    std::vector<Letter> current;
    // depth-first in the word order: words of each length are emitted in
    // lexicographic order, shorter lengths first
    for (std::size_t len = 1; len <= max_len; ++len) {
        current.assign(len, 0);
        current[0] = 1;
        if (max_index == 0) break;
        while (true) {
            words.emplace_back(current);
            std::size_t i = len;
            while (i > 0) {
                --i;
                if (current[i] < max_index) {
                    ++current[i];
                    std::fill(current.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                              current.end(), Letter{0});
                    break;
                }
                if (i == 0) goto next_length;
            }
        }
    next_length:;
    }
    return words;
}

LinearCombination::LinearCombination(const Word& w, const Rational& c) {
    if (c != 0) terms_.emplace(w, c);
}

Rational LinearCombination::coefficient_of(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LinearCombination::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

LinearCombination LinearCombination::scaled(const Rational& c) const {
    LinearCombination out;
    if (c == 0) return out;
    for (const auto& [w, coeff] : terms_) out.terms_.emplace(w, coeff * c);
    return out;
}

std::string LinearCombination::str() const {
    std::string out;
    for (const auto& [w, c] : terms_) {
        out += rational_str(c);
        out += " : ";
        out += w.str();
        out += '\n';
    }
    return out;
}

}  // namespace qmzv
