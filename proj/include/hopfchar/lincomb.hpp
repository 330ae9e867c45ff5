#pragma once

#include <map>
#include <utility>

#include "hopfchar/rational.hpp"

namespace hopfchar {

/// Formal linear combination of basis elements with exact rational
/// coefficients. Zero coefficients are never stored, so equality of the
/// term maps is equality of the combinations.
template <class B>
class LinComb {
  public:
    using TermMap = std::map<B, Rational>;

    LinComb() = default;
    explicit LinComb(B b, Rational c = 1) { add(std::move(b), std::move(c)); }

    static LinComb zero() { return LinComb(); }

    void add(B b, Rational c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(b), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinComb& other, const Rational& scale = 1) {
        for (const auto& [b, c] : other.terms_) add(b, c * scale);
    }

    LinComb& operator+=(const LinComb& o) {
        add(o);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        add(o, -1);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    /// Sum of all coefficients (the counit against the all-ones functional).
    Rational coeff_sum() const {
        Rational s = 0;
        for (const auto& [b, c] : terms_) s += c;
        return s;
    }

    const TermMap& terms() const { return terms_; }

    friend bool operator==(const LinComb&, const LinComb&) = default;

  private:
    TermMap terms_;
};

/// Linear extension of a basis map B -> LinComb<C>.
template <class C, class B, class F>
LinComb<C> lin_extend(F&& f, const LinComb<B>& x) {
    LinComb<C> out;
    for (const auto& [b, c] : x.terms()) out.add(f(b), c);
    return out;
}

/// Linear extension of a scalar functional B -> S.
template <class S, class B, class F>
S lin_functional(F&& f, const LinComb<B>& x) {
    S out{};
    for (const auto& [b, c] : x.terms()) out += f(b) * static_cast<S>(c);
    return out;
}

}  // namespace hopfchar
