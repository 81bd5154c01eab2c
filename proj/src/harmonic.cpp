#include "qharm/harmonic.hpp"

#include <sstream>

namespace qharm {

namespace {

mpz_class factorial(long v) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

} // namespace

mpz_class dim_full(int N, int m) {
    if (N < 1) throw InvalidDimension("dim_full: N must be >= 1");
    if (m < 0) return 0;
    return factorial(N + m - 1) / (factorial(N - 1) * factorial(m));
}

mpz_class dim_harmonic(int N, int m) {
    if (N < 2) throw InvalidDimension("dim_harmonic: N must be >= 2");
    if (m < 0) return 0;
    if (N == 2) return m == 0 ? 1 : 2;
    return factorial(m + N - 3) * (2 * m + N - 2) / (factorial(N - 2) * factorial(m));
}

QScalar projector_alpha(int N, int m, int k) {
    const QScalar q2 = QScalar::qpow(2);
    QScalar num = QScalar::qpow(2 * k * k - 2 * m * k - k) *
                  pow(QScalar::one() - q2, 2 * k);
    QScalar den = pow(QScalar::one() + QScalar::qpow(N - 2), 2 * k) *
                  qpochhammer(QScalar::qpow(-N - 2 * m + 4), q2, k) *
                  qpochhammer(q2, q2, k);
    return num / den;
}

Poly project(const Poly& p) {
    int m = 0;
    if (!p.homogeneous(&m)) throw NotHomogeneous("project: input must be homogeneous");
    if (p.is_zero() || m < 2) return p;
    const int N = p.N();
    const Space sp(N);
    const LinearOperator lap = laplacian(sp, LaplacianMode::direct);
    const Poly Q = q_radius(sp, 1);

    Poly result = p; // k = 0, alpha_0 = 1
    Poly cur = p;
    Poly Qk = Poly::one(N);
    for (int k = 1; 2 * k <= m; ++k) {
        cur = lap.apply(cur);
        if (cur.is_zero()) break;
        Qk = multiply(Qk, Q);
        result += multiply(Qk, cur) * projector_alpha(N, m, k);
    }
    return result;
}

Poly divide_by_q_radius(const Poly& p) {
    const int N = p.N();
    Poly out(N);
    if (p.is_zero()) return out;
    const Space sp(N);
    const Poly Q = q_radius(sp, 1);
    const Monomial& qlead = Q.terms().begin()->first; // x_1 x_N

    Poly rem = p;
    while (!rem.is_zero()) {
        const auto& [mu, c] = *rem.terms().begin();
        Monomial lambda = mu;
        for (int i = 1; i <= N; ++i) {
            lambda.exp(i) -= qlead.exp(i);
            if (lambda.exp(i) < 0)
                throw InternalError("divide_by_q_radius: not divisible by Q");
        }
        Poly qx = multiply(Q, Poly::monomial(N, lambda, QScalar::one()));
        QScalar lead = qx.coeff(mu);
        if (lead.is_zero()) throw InternalError("divide_by_q_radius: leading term lost");
        QScalar f = c / lead;
        out.add_term(lambda, f);
        rem -= qx * f;
    }
    return out;
}

std::vector<std::pair<int, Poly>> harmonic_decompose(const Poly& p) {
    int m = 0;
    if (!p.homogeneous(&m)) throw NotHomogeneous("harmonic_decompose: input must be homogeneous");
    std::vector<std::pair<int, Poly>> out;
    Poly cur = p;
    int j = 0;
    while (!cur.is_zero()) {
        Poly h = project(cur);
        if (!h.is_zero()) out.emplace_back(j, h);
        Poly rem = cur - h;
        if (rem.is_zero()) break;
        cur = divide_by_q_radius(rem);
        ++j;
    }
    return out;
}

namespace {

// C^{m,k}_{m1 m1'} of the t-polynomial (zonal when l = 0).
QScalar t_poly_coeff(const Space& sp, int m, int m1, int m1p, int l, int k) {
    const QScalar q2 = QScalar::qpow(2);
    const int two_eps = sp.odd ? 1 : 2; // epsilon = 1/2 (odd), 1 (even)
    QScalar num = qpochhammer(QScalar::qpow(-2 * m1), q2, k) *
                  qpochhammer(QScalar::qpow(-2 * m1p), q2, k) *
                  QScalar::tpow((-2 * sp.n + two_eps - 4 * l + 4) * k);
    QScalar den = qpochhammer(q2, q2, k) *
                  qpochhammer(QScalar::qpow(-sp.N - 2 * m + 4), q2, k) *
                  pow(QScalar::one() + QScalar::qpow(sp.N - 2), k);
    return num / den;
}

} // namespace

Poly t_poly(int N, int m, int m1, int m1p, int l) {
    if (N < 3) throw InvalidDimension("t_poly: N must be >= 3");
    if (m1 < 0 || m1p < 0 || l < 0) throw IndexOutOfRange("t_poly: negative parameter");
    if (m != m1 + m1p + l) throw DegreeMismatch("t_poly: m must equal m1 + m1' + l");
    const Space sp(N);
    const Poly Q = q_radius(sp, 1);
    Poly out(N);
    Poly Qk = Poly::one(N);
    const int kmax = std::min(m1, m1p);
    for (int k = 0; k <= kmax; ++k) {
        Monomial mono(N);
        mono.exp(1) = m1 - k;
        mono.exp(N) = m1p - k;
        out += multiply(Qk, Poly::monomial(N, mono, t_poly_coeff(sp, m, m1, m1p, l, k)));
        if (k < kmax) Qk = multiply(Qk, Q);
    }
    return out;
}

Poly zonal(int N, int m1, int m1p) { return t_poly(N, m1 + m1p, m1, m1p, 0); }

std::vector<QScalar> closed_form_middle_jacobi_coeffs(int N, int m) {
    if (N < 3 || N % 2 == 0) throw InvalidDimension("closed_form_middle: N must be odd, >= 3");
    // alpha = -N/2 - m + 1, beta = (N-3)/2, base q^2, degree floor(m/2)
    std::vector<QScalar> c =
        little_q_jacobi(m / 2, -N - 2 * m + 2, N - 3, /*base_q_exp=*/2);
    // argument (1+q)/(q(1+q^{N-2})) Q x^{-2}
    const QScalar arg = (QScalar::one() + QScalar::qpow(1)) /
                        (QScalar::qpow(1) * (QScalar::one() + QScalar::qpow(N - 2)));
    QScalar ap = QScalar::one();
    for (auto& v : c) {
        v = v * ap;
        ap = ap * arg;
    }
    return c;
}

Poly closed_form_middle(int N, int m) {
    if (N < 3 || N % 2 == 0) throw InvalidDimension("closed_form_middle: N must be odd, >= 3");
    const Space sp(N);
    const Poly Q = q_radius(sp, 1);
    const QScalar q2 = QScalar::qpow(2);
    const QScalar a = QScalar::qpow(1) * (QScalar::one() + QScalar::qpow(1)) /
                      (QScalar::one() + QScalar::qpow(N - 2));
    Poly out(N);
    Poly Qk = Poly::one(N);
    QScalar ak = QScalar::one();
    for (int k = 0; 2 * k <= m; ++k) {
        QScalar c = qpochhammer(QScalar::qpow(-m), q2, k) *
                    qpochhammer(QScalar::qpow(-m + 1), q2, k) /
                    (qpochhammer(q2, q2, k) * qpochhammer(QScalar::qpow(-N - 2 * m + 4), q2, k));
        Monomial mono(N);
        mono.exp(sp.n + 1) = m - 2 * k;
        out += multiply(Qk, Poly::monomial(N, mono, c * ak));
        if (2 * (k + 1) <= m) {
            Qk = multiply(Qk, Q);
            ak = ak * a;
        }
    }
    return out;
}

std::string HarmonicLabel::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ",";
        os << m[i] << "," << mp[i];
    }
    os << "|" << tail << ")";
    return os.str();
}

namespace {

void xi_enumerate(const Space& sp, int m, int level, int levels, int residual,
                  HarmonicLabel& cur, std::vector<HarmonicLabel>& out) {
    if (level == levels) {
        if (sp.odd) {
            if (residual <= 1) {
                cur.tail = residual; // sigma
                out.push_back(cur);
            }
        } else {
            if (residual == 0) {
                cur.tail = 0;
                out.push_back(cur);
            } else {
                cur.tail = -residual;
                out.push_back(cur);
                cur.tail = residual;
                out.push_back(cur);
            }
        }
        return;
    }
    for (int mi = 0; mi <= residual; ++mi) {
        for (int mpi = 0; mi + mpi <= residual; ++mpi) {
            cur.m[static_cast<std::size_t>(level)] = mi;
            cur.mp[static_cast<std::size_t>(level)] = mpi;
            xi_enumerate(sp, m, level + 1, levels, residual - mi - mpi, cur, out);
        }
    }
    cur.m[static_cast<std::size_t>(level)] = 0;
    cur.mp[static_cast<std::size_t>(level)] = 0;
}

} // namespace

std::vector<std::pair<HarmonicLabel, Poly>> xi_basis(int N, int m) {
    // N = 2 bottoms out the chain: two commuting variables with harmonic
    // space spanned by 1, x_1^m, x_2^m; that is the k-tail convention with
    // no t-polynomial levels.
    if (N < 2) throw InvalidDimension("xi_basis: N must be >= 2");
    if (m < 0) throw IndexOutOfRange("xi_basis: negative degree");
    const Space sp(N);
    const int levels = sp.odd ? sp.n : sp.n - 1;

    std::vector<HarmonicLabel> labels;
    HarmonicLabel cur;
    cur.m.assign(static_cast<std::size_t>(levels), 0);
    cur.mp.assign(static_cast<std::size_t>(levels), 0);
    xi_enumerate(sp, m, 0, levels, m, cur, labels);
    // enumeration order: two tails come out as (-k, +k); lexicographic on
    // (m_1, m'_1, ..., tail) wants -k before +k, which xi_enumerate emits.

    std::vector<std::pair<HarmonicLabel, Poly>> out;
    out.reserve(labels.size());
    for (const HarmonicLabel& lab : labels) {
        Poly xi = Poly::one(N);
        int residual = m;
        for (int j = 0; j < levels; ++j) {
            const int w = N - 2 * j;
            const int mj = lab.m[static_cast<std::size_t>(j)];
            const int mpj = lab.mp[static_cast<std::size_t>(j)];
            Poly tp = t_poly(w, residual, mj, mpj, residual - mj - mpj);
            xi = multiply(xi, embed(tp, j, N));
            residual -= mj + mpj;
        }
        if (sp.odd) {
            if (lab.tail == 1) xi = multiply(xi, Poly::generator(N, sp.n + 1));
        } else if (lab.tail != 0) {
            const int gen = lab.tail > 0 ? sp.n : sp.n + 1;
            Monomial mono(N);
            mono.exp(gen) = lab.tail > 0 ? lab.tail : -lab.tail;
            xi = multiply(xi, Poly::monomial(N, mono, QScalar::one()));
        }
        out.emplace_back(lab, xi);
    }
    return out;
}

} // namespace qharm
