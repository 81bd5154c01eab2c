#pragma once

#include <vector>

#include "qharm/scalar.hpp"

namespace qharm {

using QMatrix = std::vector<std::vector<QScalar>>;

/// Exact rank over Q(t) by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer-polynomial matrix. Intended for matrices
/// small enough for symbolic elimination.
int rank_fraction_free(const QMatrix& m);

/// Exact rank of the specialization t = t0 over Q (fraction-free over Z).
/// Always a lower bound for the rank over Q(t); when it reaches the row
/// or column count it certifies full rank. Throws PoleAtPoint when an
/// entry has a pole at t0.
int rank_at_point(const QMatrix& m, const mpq_class& t0);

} // namespace qharm
