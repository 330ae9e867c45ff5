#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfchar/forest.hpp"
#include "hopfchar/rational.hpp"
#include "hopfchar/word.hpp"

namespace hopfchar {

/// Bivariate polynomial with exact rational coefficients, sparse on
/// monomials x^m y^n. No zero coefficients are stored.
class BivarPoly {
  public:
    using TermMap = std::map<std::pair<int, int>, Rational>;

    BivarPoly() = default;
    static BivarPoly monomial(int m, int n, Rational c = 1);
    static BivarPoly constant(Rational c) { return monomial(0, 0, std::move(c)); }

    void add_term(int m, int n, const Rational& c);
    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-() const;
    BivarPoly operator*(const BivarPoly& o) const;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    /// P(1,1).
    Rational eval_ones() const;
    /// P(x,x) collapsed onto pure x powers.
    BivarPoly diag() const;
    /// P(y,x).
    BivarPoly swapped() const;

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

    std::string str() const;

  private:
    TermMap terms_;
};

/// R(x^m y^n) = (m/(m+n)) x^{m+n}, and 1 on constants; extended linearly.
/// Idempotent; image spanned by pure x powers and constants.
BivarPoly organic_R(const BivarPoly& p);

/// The polynomial realization of the organic average:
/// theta P = P(x,x), sigma P = P(y,x), gamma = xy, Theta P = P(1,1).
struct OrganicModel {
    using Element = BivarPoly;
    using Scalar = Rational;

    std::string name() const { return "organic"; }
    Element unit() const { return BivarPoly::constant(1); }
    Element zero() const { return BivarPoly(); }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return -a; }
    Element R(const Element& a) const { return organic_R(a); }
    Element Rt(const Element& a) const { return a + (-organic_R(a)); }
    Element theta_map(const Element& a) const { return a.diag(); }
    Element sigma_map(const Element& a) const { return a.swapped(); }
    Element gamma_pow(unsigned n) const { return BivarPoly::monomial(n, n); }
    Scalar Theta(const Element& a) const { return a.eval_ones(); }
    Element v(const Element& a) const { return a; }  // identity majorant
    double wb_k() const { return 1.0; }
    double scalar_tol() const { return 0.0; }
    bool elements_close(const Element& a, const Element& b) const { return a == b; }
    bool is_zero_element(const Element& a) const { return a.is_zero(); }
    std::string render(const Element& a) const { return a.str(); }

    /// All monomials x^m y^n with m + n <= cap.
    std::vector<Element> sample_elements(int cap) const;
};

inline OrganicModel organic_model() { return OrganicModel(); }

/// Which sign the closed product formulas carry. `recursion` matches the
/// Atkinson recursion (and the factorization identity); `alternating`
/// multiplies in an extra (-1)^n, the variant floating around in displayed
/// versions of these formulas.
enum class SignConvention { recursion, alternating };

/// Closed form of the averaging character on a nonempty word:
///   prod_k ( w_k / (2 (w_1 + ... + w_k)) - 1 ),
/// times (-1)^n under the alternating convention. Every factor is
/// negative, so the recursion value itself has sign (-1)^n.
Rational organic_phi_closed(const Word& w, SignConvention sc = SignConvention::recursion);

/// Closed form of the antiarborified character on a forest:
///   prod over nodes ( (w_i/2) / hat_i - 1 ),
/// where hat_i sums the node's decoration with everything grafted strictly
/// above it in its own tree. Multiplicative over forest concatenation;
/// value sign is (-1)^{node count} under the recursion convention.
Rational organic_arb_closed(const Forest& f, SignConvention sc = SignConvention::recursion);

}  // namespace hopfchar
