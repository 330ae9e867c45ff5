#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hopfchar {

/// Letters live in the additive semigroup of positive integers.
using Letter = int;

/// A word over positive-integer letters. Ordered by (length, lexicographic),
/// the canonical order used for all term maps and rendered output.
class Word {
  public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
        for (Letter a : letters_)
            if (a < 1) throw std::invalid_argument("word letters must be >= 1");
    }
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    std::int64_t norm() const {
        return std::accumulate(letters_.begin(), letters_.end(), std::int64_t{0});
    }
    const std::vector<Letter>& letters() const { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    Word reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }
    Word prefix(std::size_t k) const {
        return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + k));
    }
    Word suffix_from(std::size_t k) const {
        return Word(std::vector<Letter>(letters_.begin() + k, letters_.end()));
    }
    Word prepended(Letter a) const {
        std::vector<Letter> v;
        v.reserve(letters_.size() + 1);
        v.push_back(a);
        v.insert(v.end(), letters_.begin(), letters_.end());
        return Word(std::move(v));
    }
    Word tail() const { return suffix_from(1); }
    Letter head() const { return letters_.front(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.length() != b.length()) return a.length() <=> b.length();
        return a.letters_ <=> b.letters_;
    }

  private:
    std::vector<Letter> letters_;
};

/// Comma-separated positive integers; "" or "-" is the empty word.
Word parse_word(std::string_view text);

/// "1,2,3"; the empty word renders as "-".
std::string word_str(const Word& w);

/// Compositions of every total 1..max_norm, i.e. all nonempty words with
/// norm <= max_norm, in (norm, length, lex) order. Includes the empty word first.
std::vector<Word> words_up_to_norm(int max_norm);

}  // namespace hopfchar
