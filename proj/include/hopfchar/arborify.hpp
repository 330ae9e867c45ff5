#pragma once

#include <map>
#include <memory>

#include "hopfchar/character.hpp"
#include "hopfchar/ck.hpp"
#include "hopfchar/forest.hpp"
#include "hopfchar/qsh.hpp"
#include "hopfchar/rb.hpp"

namespace hopfchar {

/// Arborification morphism: the unique bialgebra morphism from decorated
/// forests to words that intertwines B+ with letter prepending.
///   alpha(empty) = empty word,
///   alpha(tree) = prepend(root, alpha(branch forest)),
///   alpha(f g) = qsh_product(alpha(f), alpha(g)).
/// Letters of contracted output words are semigroup sums of decorations;
/// every word has norm = |f| and length <= node count.
WordComb alpha(const Forest& f);

/// A linear form on forests, memoized. Same sharing/threading contract as
/// WordChar.
template <class S>
class ForestChar {
  public:
    using Eval = std::function<S(const Forest&)>;

    ForestChar() = default;
    explicit ForestChar(Eval eval)
        : state_(std::make_shared<State>(State{std::move(eval), {}})) {}

    S operator()(const Forest& f) const {
        auto it = state_->memo.find(f);
        if (it != state_->memo.end()) return it->second;
        S value = state_->eval(f);
        state_->memo.emplace(f, value);
        return value;
    }

  private:
    struct State {
        Eval eval;
        std::map<Forest, S> memo;
    };
    std::shared_ptr<State> state_;
};

/// Contracted arborification of a word character: f -> phi(alpha(f)),
/// extended linearly over the alpha expansion. Grade-cap errors from phi
/// propagate.
template <class S>
ForestChar<S> contracted_arborify(const WordChar<S>& phi) {
    return ForestChar<S>([phi](const Forest& f) {
        return lin_functional<S>([&phi](const Word& w) { return phi(w); }, alpha(f));
    });
}

/// The arborified nest H(f): multiplicative over forest concatenation, and
/// on an irreducible tree H(tree) = R(a(root) H(branch forest)), H(empty)
/// the model unit. Evaluates phi(rev(alpha(f))) without expanding alpha.
template <RotaBaxterModel M>
typename M::Element h_forest(const M& m, const Forest& f) {
    auto out = m.unit();
    for (const Tree& t : f.trees()) {
        auto branch = h_forest(m, Forest(std::vector<Tree>(t.children())));
        out = m.mul(out, m.R(m.mul(a_of(m, Word{t.root()}), branch)));
    }
    return out;
}

/// Antiarborified character: Theta(H(f)). Agrees with
/// (phi o rev o alpha)(f); that identity is the module's central
/// cross-check, not the definition used here.
template <RotaBaxterModel M>
typename M::Scalar antiarborify(const M& m, const Forest& f) {
    return m.Theta(h_forest(m, f));
}

}  // namespace hopfchar
