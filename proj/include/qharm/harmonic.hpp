#pragma once

#include <utility>
#include <vector>

#include "qharm/operators.hpp"

namespace qharm {

/// dim A_m = (N+m-1)! / ((N-1)! m!)
mpz_class dim_full(int N, int m);

/// dim H_m = (m+N-3)! (2m+N-2) / ((N-2)! m!) for N >= 3; for N = 2 the
/// harmonic space is spanned by 1, x_1^m, x_2^m.
mpz_class dim_harmonic(int N, int m);

/// Harmonic projector H_m p = sum_k alpha_k Qhat^k Delta_q^k p with
/// alpha_0 = 1, so harmonic polynomials are fixed. Input must be
/// homogeneous.
Poly project(const Poly& p);

/// alpha_k of the projector on A_m.
QScalar projector_alpha(int N, int m, int k);

/// Exact division by Q; throws InternalError when p is not a multiple of Q.
Poly divide_by_q_radius(const Poly& p);

/// p = sum_j Q^j h_j with h_j harmonic of degree m-2j; zero components
/// are omitted.
std::vector<std::pair<int, Poly>> harmonic_decompose(const Poly& p);

/// Zonal polynomial phi^m_{m1,m1'} = H_m(x_1^{m1} x_{1'}^{m1'}).
Poly zonal(int N, int m1, int m1p);

/// t^{N,m}_{m1,m1'} with m = m1 + m1' + l; reduces to zonal at l = 0.
Poly t_poly(int N, int m, int m1, int m1p, int l);

/// H_m x_{n+1}^m for odd N, assembled so no negative power appears.
Poly closed_form_middle(int N, int m);

/// Coefficients of closed_form_middle as the little q-Jacobi polynomial
/// P^{(-N/2-m+1,(N-3)/2)}_{floor(m/2)}( (1+q)/(q(1+q^{N-2})) Q x^{-2}; q^2 ):
/// entry k multiplies Q^k x_{n+1}^{m-2k}.
std::vector<QScalar> closed_form_middle_jacobi_coeffs(int N, int m);

/// Label of a basis element of H_m along the subalgebra chain:
/// (m_1, m'_1, ..., tail) with tail = k (even N, any sign) or sigma (odd N).
struct HarmonicLabel {
    std::vector<int> m;
    std::vector<int> mp;
    int tail = 0;

    bool operator==(const HarmonicLabel&) const = default;
    std::string str() const;
};

/// The orthogonal basis of H_m built from nested t-polynomials, labels
/// enumerated lexicographically on (m_1, m'_1, m_2, m'_2, ..., tail).
std::vector<std::pair<HarmonicLabel, Poly>> xi_basis(int N, int m);

} // namespace qharm
