#pragma once

#include <string>

#include <json.hpp>

#include "hopfchar/ck.hpp"
#include "hopfchar/forest.hpp"
#include "hopfchar/lincomb.hpp"
#include "hopfchar/qsh.hpp"
#include "hopfchar/rb.hpp"
#include "hopfchar/word.hpp"

namespace hopfchar {

using nlohmann::json;

// Text rendering: "c1*(w1) + c2*(w2) + ...", unit coefficients omitted,
// rationals as p/q. Basis order is the canonical term-map order, so output
// is deterministic.
std::string lincomb_str(const WordComb& x);
std::string lincomb_str(const LinComb<WordPair>& x);
std::string lincomb_str(const LinComb<ForestPair>& x);

json rational_json(const Rational& q);  // {"num": "...", "den": "..."} decimal strings
json word_json(const Word& w);          // [1,2,3]
json lincomb_json(const WordComb& x);   // {"terms":[{"word":[...],"coef":...}]}
json lincomb_json(const LinComb<WordPair>& x);
json lincomb_json(const LinComb<ForestPair>& x);  // forests as canonical strings
json report_json(const CheckReport& rep);

}  // namespace hopfchar
