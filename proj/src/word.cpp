#include "hopfchar/word.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hopfchar {

Word parse_word(std::string_view text) {
    if (text.empty() || text == "-") return Word{};
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad word letter '" + std::string(tok) + "'");
        if (value < 1) throw std::invalid_argument("word letters must be >= 1");
        letters.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Word(std::move(letters));
}

std::string word_str(const Word& w) {
    if (w.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

std::vector<Word> words_up_to_norm(int max_norm) {
    std::vector<Word> out;
    out.emplace_back();
    std::vector<Letter> cur;
    // depth-first over compositions of each total
    auto rec = [&](auto&& self, int remaining) -> void {
        for (int a = 1; a <= remaining; ++a) {
            cur.push_back(a);
            out.emplace_back(cur);
            self(self, remaining - a);
            cur.pop_back();
        }
    };
    rec(rec, max_norm);
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.norm() != b.norm()) return a.norm() < b.norm();
        return a < b;
    });
    return out;
}

}  // namespace hopfchar
