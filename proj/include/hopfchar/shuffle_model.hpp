#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfchar/organic.hpp"
#include "hopfchar/qsh.hpp"
#include "hopfchar/rational.hpp"
#include "hopfchar/word.hpp"

namespace hopfchar {

/// The shuffle-algebra realization of the organic average. Carrier: the
/// span of words over {1,2} under the plain shuffle product. R projects
/// onto words whose first letter is 1 (the empty word goes to the Rt
/// side), theta = sigma swaps the letters 1 <-> 2, gamma = eta + swap(eta),
/// Theta(w) = 1/len(w)! is the exponential character.
struct ShuffleModel {
    using Element = LinComb<Word>;
    using Scalar = Rational;

    explicit ShuffleModel(Word eta);

    std::string name() const { return "shuffle"; }
    Element unit() const { return Element(Word{}); }
    Element zero() const { return Element(); }
    Element mul(const Element& a, const Element& b) const { return sh_product(a, b); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return a * Rational(-1); }
    Element R(const Element& a) const;
    Element Rt(const Element& a) const;
    Element theta_map(const Element& a) const { return letter_swap(a); }
    Element sigma_map(const Element& a) const { return letter_swap(a); }
    /// Shuffle power of gamma; memoized, shared across copies.
    Element gamma_pow(unsigned n) const;
    Scalar Theta(const Element& a) const;
    Element v(const Element& a) const { return a; }  // identity majorant
    double wb_k() const { return 1.0; }
    double scalar_tol() const { return 0.0; }
    bool elements_close(const Element& a, const Element& b) const { return a == b; }
    bool is_zero_element(const Element& a) const { return a.is_zero(); }
    std::string render(const Element& a) const;

    /// All words over {1,2} of length <= cap, as basis elements (both
    /// sides of every checked identity are bilinear, so basis pairs
    /// suffice).
    std::vector<Element> sample_elements(int cap) const;

    static Element letter_swap(const Element& a);

    Word eta;
    int l;  // len(eta)

  private:
    std::shared_ptr<std::vector<Element>> gamma_powers_;  // cache, index = n
};

/// eta must be a nonempty word over {1,2} starting with 1; its swap then
/// starts with 2, which the word-counting identities rely on. The
/// exponential character normalizes Theta(gamma) = 2/l!, so the average
/// axioms need l = 2 (the default eta).
ShuffleModel shuffle_model(const Word& eta = Word{1, 2});

/// Closed count of words (with multiplicity) in the length-n left iterate:
///   K(w) = 2^{|w|-n} (l|w|)! / (l!)^{|w|} * prod_k (1 + s_{k-1}/s_k)
/// with s_k the prefix sums of w. Matches the brute-force expansion count
/// up to the global sign (-1)^n.
Int shuffle_K_closed(const Word& w, int l = 2);

/// Brute-force oracle: absolute coefficient sum of the left Atkinson
/// iterate (all coefficients share the sign (-1)^n).
Int shuffle_iterate_word_count(const ShuffleModel& m, const Word& w);

/// Same closed product as organic_phi_closed: the two realizations carry
/// one character.
Rational shuffle_phi_closed(const Word& w, SignConvention sc = SignConvention::recursion);

}  // namespace hopfchar
