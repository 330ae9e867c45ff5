#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "hopfchar/qsh.hpp"
#include "hopfchar/word.hpp"

namespace hopfchar {

/// Thrown when a character is evaluated past its declared norm cap.
/// Convolution inverses are only meaningful up to a stated grade, so
/// exceeding the cap is an error rather than a silent truncation.
struct GradeCapError : std::runtime_error {
    GradeCapError(const Word& w, std::int64_t cap)
        : std::runtime_error("word " + word_str(w) + " exceeds grade cap " +
                             std::to_string(cap)),
          norm(w.norm()),
          cap(cap) {}
    std::int64_t norm;
    std::int64_t cap;
};

/// A linear form on words with values in S (exact Rational or double),
/// memoized per word up to a fixed norm cap. Instances share their memo
/// through copies; a given instance is not safe for concurrent callers,
/// but evaluation is pure so distinct copies of the underlying state
/// always agree.
template <class S>
class WordChar {
  public:
    using Eval = std::function<S(const Word&)>;

    WordChar() = default;
    WordChar(std::int64_t norm_cap, Eval eval)
        : state_(std::make_shared<State>(State{std::move(eval), {}, norm_cap})) {}

    S operator()(const Word& w) const {
        if (w.norm() > state_->cap) throw GradeCapError(w, state_->cap);
        auto it = state_->memo.find(w);
        if (it != state_->memo.end()) return it->second;
        S value = state_->eval(w);
        state_->memo.emplace(w, value);
        return value;
    }

    std::int64_t cap() const { return state_->cap; }

  private:
    struct State {
        Eval eval;
        std::map<Word, S> memo;
        std::int64_t cap;
    };
    std::shared_ptr<State> state_;
};

/// Convolution unit: 1 on the empty word, 0 elsewhere.
template <class S>
WordChar<S> unit_char(std::int64_t cap) {
    return WordChar<S>(cap, [](const Word& w) { return w.empty() ? S(1) : S(0); });
}

/// iota: 1 on words of length <= 1, 0 otherwise. A quasi-shuffle character.
template <class S>
WordChar<S> iota_char(std::int64_t cap) {
    return WordChar<S>(cap, [](const Word& w) { return w.length() <= 1 ? S(1) : S(0); });
}

/// Convolution against the deconcatenation coproduct:
/// (f * g)(w) = sum over splits w = w1.w2 of f(w1) g(w2).
template <class S>
WordChar<S> convolve(const WordChar<S>& f, const WordChar<S>& g) {
    std::int64_t cap = std::min(f.cap(), g.cap());
    return WordChar<S>(cap, [f, g](const Word& w) {
        S acc{};
        for (std::size_t k = 0; k <= w.length(); ++k)
            acc += f(w.prefix(k)) * g(w.suffix_from(k));
        return acc;
    });
}

/// Convolution inverse by the graded-connected recursion:
/// g(empty) = 1,  g(w) = -sum over proper prefixes w1 of g(w1) f(w2).
/// Requires f(empty) = 1.
template <class S>
WordChar<S> conv_inverse(const WordChar<S>& f) {
    if (f(Word{}) != S(1))
        throw std::invalid_argument("conv_inverse requires f(empty word) = 1");
    struct InverseEval {
        WordChar<S> f;
        std::shared_ptr<std::map<Word, S>> memo;
        S operator()(const Word& w) const {
            if (w.empty()) return S(1);
            auto it = memo->find(w);
            if (it != memo->end()) return it->second;
            S acc{};
            for (std::size_t k = 0; k < w.length(); ++k)
                acc += (*this)(w.prefix(k)) * f(w.suffix_from(k));
            S value = S(-1) * acc;
            memo->emplace(w, value);
            return value;
        }
    };
    return WordChar<S>(f.cap(), InverseEval{f, std::make_shared<std::map<Word, S>>()});
}

}  // namespace hopfchar
