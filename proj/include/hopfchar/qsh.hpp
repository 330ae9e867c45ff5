#pragma once

#include <utility>

#include "hopfchar/lincomb.hpp"
#include "hopfchar/word.hpp"

namespace hopfchar {

using WordComb = LinComb<Word>;
using WordPair = std::pair<Word, Word>;

/// Quasi-shuffle (stuffle) product: shuffles plus letter-contraction terms.
/// Every word in the expansion has norm |u| + |v|.
WordComb qsh_product(const Word& u, const Word& v);

/// Plain shuffle product: the quasi-shuffle recursion without contractions.
/// Every word in the expansion has length len(u) + len(v).
WordComb sh_product(const Word& u, const Word& v);

WordComb qsh_product(const WordComb& x, const WordComb& y);
WordComb sh_product(const WordComb& x, const WordComb& y);

/// Deconcatenation coproduct: sum of all two-part splits, len(w) + 1 terms.
LinComb<WordPair> deconcat(const Word& w);

inline WordComb rev(const WordComb& x) {
    return lin_extend<Word>([](const Word& w) { return WordComb(w.reversed()); }, x);
}

/// Prepends a letter to every word of the combination.
inline WordComb prepend(Letter a, const WordComb& x) {
    return lin_extend<Word>([a](const Word& w) { return WordComb(w.prepended(a)); }, x);
}

}  // namespace hopfchar
