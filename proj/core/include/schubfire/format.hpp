#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schubfire/chow.hpp"
#include "schubfire/polynomial.hpp"

namespace schubfire {

/// Schubert-basis rendering sorted by (degree, lex): "8*s[3,2,1]"; with latex,
/// "8\,\sigma_{3,2,1}". The zero class prints as "0".
std::string format_schubert(const ChowClass& a, bool latex = false);

/// Terms of a Chern polynomial in print order: ascending degree, then
/// lexicographically descending exponents (so c1^3 precedes c1*c2 precedes c3).
std::vector<std::pair<Polynomial::Exponent, BigInt>> chern_terms(const Polynomial& p);

/// "-c1^3 + 2*c1*c2 - c3"; with latex, "-{c_1}^{3}+2\,{c_1}\,{c_2}-{c_3}".
std::string format_chern(const Polynomial& p, bool latex = false);

}  // namespace schubfire
