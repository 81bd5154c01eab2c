#pragma once

#include <vector>

#include "qharm/algebra.hpp"
#include "qharm/ratmat.hpp"

namespace qharm {

/// Membership in (tau A)^0: nu_i = nu_{i'} for i <= n and, for odd N,
/// nu_{n+1} even.
bool in_diagonal_support(const Space& sp, const Monomial& m);

/// The lift of the invariant functional on the quantum sphere: zero off
/// the diagonal support, the explicit product formula on it, extended
/// linearly. Factoring through the quotient by Q - 1 is a verified
/// property, not an assumption.
QScalar h_functional(const Poly& p);

/// <p1, p2> = h((tau p1)^* (tau p2)), computed as h(star(p1) * p2).
QScalar inner(const Poly& p1, const Poly& p2);

QMatrix gram(const std::vector<Poly>& basis);

} // namespace qharm
