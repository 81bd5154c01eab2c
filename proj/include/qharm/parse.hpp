#pragma once

#include <string_view>

#include "qharm/algebra.hpp"

namespace qharm {

/// Parses the CLI expression grammar into a normal-form Poly.
/// Grammar: rational literals, q, q^(a/2) powers, variables x1..xN,
/// + - * / ^ ( ), with juxtaposition meaning noncommutative product in
/// written order. Precedence: ^  >  juxtaposition / * / /  >  + -.
Poly parse_poly(std::string_view text, int N);

/// Same grammar with variables rejected; yields the scalar value.
QScalar parse_scalar(std::string_view text);

} // namespace qharm
