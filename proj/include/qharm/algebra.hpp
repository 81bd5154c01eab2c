#pragma once

#include <map>
#include <string>
#include <vector>

#include "qharm/scalar.hpp"

namespace qharm {

/// Quantum Euclidean space E^N_q descriptor: N, n = floor(N/2), parity,
/// the rho vector (stored doubled so half-integers stay integral) and the
/// pairing j -> j' = N - j + 1.
struct Space {
    int N = 0;
    int n = 0;
    bool odd = false;

    explicit Space(int N_);

    int prime(int i) const { return N - i + 1; }
    int rho2(int i) const { return rho2_[static_cast<std::size_t>(i)]; } // 2*rho_i
    QScalar q_rho(int i) const { return QScalar::tpow(rho2(i)); }       // q^{rho_i}

private:
    std::vector<int> rho2_; // 1-based
};

Space make_space(int N); // InvalidDimension when N < 2

/// Exponent vector of a PBW basis monomial x^nu = x_1^{nu_1} ... x_N^{nu_N}.
struct Monomial {
    std::vector<int> nu; // nu[i] is the exponent of x_{i+1}

    Monomial() = default;
    explicit Monomial(int N) : nu(static_cast<std::size_t>(N), 0) {}

    int degree() const;
    int exp(int i) const { return nu[static_cast<std::size_t>(i - 1)]; } // 1-based
    int& exp(int i) { return nu[static_cast<std::size_t>(i - 1)]; }
    int size() const { return static_cast<int>(nu.size()); }

    bool operator==(const Monomial&) const = default;
};

/// Graded-lex, biggest first: higher total degree first, then bigger
/// exponent vector lexicographically. Map iteration therefore starts at
/// the leading term, which the exact division by Q relies on.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.nu > b.nu;
    }
};

/// Element of C_q[x_1..x_N] in PBW normal form: a finite map from
/// monomials to nonzero QScalar coefficients.
class Poly {
public:
    using TermMap = std::map<Monomial, QScalar, GrlexDesc>;

    explicit Poly(int N) : N_(N) {}
    static Poly zero(int N) { return Poly(N); }
    static Poly one(int N);
    static Poly constant(int N, const QScalar& c);
    static Poly generator(int N, int i); // x_i, 1 <= i <= N
    static Poly monomial(int N, Monomial m, QScalar c);

    int N() const { return N_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for zero
    bool homogeneous(int* deg = nullptr) const;
    const TermMap& terms() const { return terms_; }
    QScalar coeff(const Monomial& m) const;
    /// Coefficient of the empty monomial; the whole value when the poly is scalar.
    bool scalar_value(QScalar* out) const;

    void add_term(const Monomial& m, const QScalar& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const QScalar& c) const;

    bool operator==(const Poly& o) const { return N_ == o.N_ && terms_ == o.terms_; }

    std::string str() const;

private:
    int N_;
    TermMap terms_;
};

inline Poly operator*(const QScalar& c, const Poly& p) { return p * c; }

/// Normal form of an arbitrary word in the generators (letters 1..N),
/// rewriting with the defining relations of the algebra.
Poly normal_order_word(const Space& sp, const std::vector<int>& word, const QScalar& coeff);

Poly multiply(const Poly& a, const Poly& b);

/// The star anti-automorphism determined by x_i^* = q^{rho_{i'}} x_{i'}.
Poly star(const Poly& p);

/// Q_j = sum_{i=j}^{j'} q^{rho_{i'}} x_i x_{i'}; j = 1 gives the squared
/// q-radius Q, which generates the center.
Poly q_radius(const Space& sp, int j = 1);

std::map<int, Poly> homogeneous_components(const Poly& p);

/// (nu_1 - nu_{1'}, ..., nu_n - nu_{n'})
std::vector<int> weight_of(const Space& sp, const Monomial& m);

/// All monomials of total degree m in N variables, leading (grlex) first.
std::vector<Monomial> monomials_of_degree(int N, int m);

/// Inject a polynomial on the window x_1..x_M into an N-variable algebra
/// as a polynomial in x_{1+offset}..x_{M+offset}.
Poly embed(const Poly& inner, int offset, int N_outer);

} // namespace qharm
