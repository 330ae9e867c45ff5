#pragma once

#include <utility>

#include "hopfchar/forest.hpp"
#include "hopfchar/lincomb.hpp"

namespace hopfchar {

using ForestPair = std::pair<Forest, Forest>;

/// Degrafting coproduct on decorated rooted forests, computed by the B+
/// induction:
///   D(empty) = empty (x) empty,
///   D multiplicative over forest concatenation,
///   D(B_eta(x)) = empty (x) B_eta(x) + (B_eta (x) id) D(x).
/// The factor containing the original roots sits on the left.
LinComb<ForestPair> ck_coproduct(const Forest& f);

/// Counit: 1 on the empty forest, 0 otherwise.
inline Rational ck_counit(const Forest& f) { return f.empty() ? 1 : 0; }

}  // namespace hopfchar
