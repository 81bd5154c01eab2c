#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qharm/errors.hpp"

namespace qharm {

/// Dense polynomial in t over Z, coefficient of t^i at index i.
/// The zero polynomial is the empty coefficient vector.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(long v);
    explicit ZPoly(mpz_class v);

    static ZPoly tpow(int k); // t^k, k >= 0
    static ZPoly from_coeffs(std::vector<mpz_class> c);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    int valuation() const;                                         // lowest nonzero power, 0 for zero
    const mpz_class& coeff(int i) const;
    const mpz_class& lead() const;
    bool is_monomial() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly operator*(const mpz_class& v) const;
    ZPoly mul_tpow(int k) const;   // multiply by t^k, k >= 0
    ZPoly shift_down(int k) const; // divide by t^k; requires valuation >= k

    ZPoly divexact(const ZPoly& d) const; // throws InternalError when not exact
    ZPoly divexact(const mpz_class& v) const;
    mpz_class content() const; // nonnegative gcd of coefficients, 0 for zero

    static ZPoly gcd(const ZPoly& a, const ZPoly& b); // positive leading coefficient

    mpq_class eval(const mpq_class& t0) const;

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Element of Q(t), t = q^{1/2}: a canonical fraction num/den of integer
/// polynomials. Canonical form: den != 0, gcd(num, den) = 1 over Z[t]
/// (no common polynomial factor, coprime integer contents), den has
/// positive leading coefficient, and zero is 0/1. Structural equality of
/// canonical forms is mathematical equality, which the test surface
/// relies on throughout.
class QScalar {
public:
    QScalar() : num_(), den_(1) {} // zero
    static QScalar from_int(long v) { return QScalar(ZPoly(v), ZPoly(1)); }
    static QScalar integer(const mpz_class& v) { return QScalar(ZPoly(v), ZPoly(1)); }
    static QScalar rational(long p, long q);
    static QScalar from_mpq(const mpq_class& v);
    static QScalar make(ZPoly num, ZPoly den); // canonicalizes

    static QScalar tpow(int k);                             // t^k, any sign
    static QScalar qpow(int a) { return tpow(2 * a); }      // q^a
    static QScalar qpow_half(int two_a) { return tpow(two_a); } // q^{two_a/2}
    static const QScalar& zero();
    static const QScalar& one();

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    QScalar operator-() const;
    QScalar inv() const; // throws DivisionByZero on zero

    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator/(const QScalar& a, const QScalar& b);
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Exact value at t = t0; throws PoleAtPoint when the denominator vanishes.
    mpq_class eval_at(const mpq_class& t0) const;

    /// Rendered in powers of q and q^(1/2), e.g. "(1 - q^2)/(1 + q + q^2)".
    std::string str() const;

private:
    QScalar(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    ZPoly num_, den_;
};

QScalar pow(const QScalar& base, long e); // e >= 0, or base invertible

enum class QConvention { basic, symmetric };

/// q-number: [a] = (1-q^a)/(1-q) (basic) or [a]_q = (q^a-q^{-a})/(q-q^{-1})
/// (symmetric). a may be negative.
QScalar qnum(long a, QConvention conv);

/// Symmetric q-number of a half-integer argument two_a/2; needed by the
/// dual-pair coefficients [r+m+N/2-1]_q when N is odd.
QScalar qnum_symmetric_half(long two_a);

QScalar qfactorial(long m, QConvention conv);        // [m]! = [1][2]...[m]
QScalar qdouble_factorial(long s, QConvention conv); // [s]!! = [s][s-2]...([2] or [1])

/// (a; base)_s = (1-a)(1-a*base)...(1-a*base^{s-1}); s = 0 gives 1.
QScalar qpochhammer(const QScalar& a, const QScalar& base, long s);

/// Coefficients of the terminating 2phi1(a1, a2; b; base, z) as a series
/// in z. Requires a1 or a2 of the form base^{-k}; throws DivisionByZero
/// if a denominator Pochhammer factor vanishes before termination.
std::vector<QScalar> phi21_coeffs(const QScalar& a1, const QScalar& a2,
                                  const QScalar& b, const QScalar& base);
QScalar phi21(const QScalar& a1, const QScalar& a2, const QScalar& b,
              const QScalar& base, const QScalar& z);

/// Little q-Jacobi polynomial P^{(alpha,beta)}_k(x; q^{base_q_exp}) =
/// 2phi1(p^{-k}, p^{alpha+beta+k+1}; p^{alpha+1}; p, p x) with p the base;
/// alpha, beta are half-integers passed doubled. Returns the k+1
/// coefficients in x.
std::vector<QScalar> little_q_jacobi(long k, int two_alpha, int two_beta,
                                     int base_q_exp = 1);

} // namespace qharm
