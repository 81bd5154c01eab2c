#pragma once

#include "qharm/operators.hpp"
#include "qharm/report.hpp"

namespace qharm {

/// The U_q(sl_2) representation on the coordinate algebra:
/// omega(k) = q^{N/2} q^gamma, omega(e) = Qhat,
/// omega(f) = -Delta_q q^{-gamma} q^{N/2} / (1+q^{N-2})^2.
struct OmegaTriple {
    LinearOperator k;
    LinearOperator k_inv;
    LinearOperator e;
    LinearOperator f;
};

OmegaTriple omega(const Space& sp);

/// Checks ke = q^2 ek, kf = q^{-2} fk, ef - fe = (k - k^{-1})/(q - q^{-1})
/// as zero operators on A_m for m <= deg_max.
Report verify_sl2(const Space& sp, int deg_max);

/// For every xi-basis element h of H_m and r <= r_max, checks
/// omega(e)(Q^r h) = Q^{r+1} h, the omega(f) eigen-coefficient
/// -[r]_q [r+m+N/2-1]_q, and the omega(k) eigenvalue q^{2r+m+N/2}.
Report lowest_weight_check(const Space& sp, int m, int r_max);

} // namespace qharm
