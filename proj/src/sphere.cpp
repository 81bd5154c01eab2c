#include "qharm/sphere.hpp"

namespace qharm {

bool in_diagonal_support(const Space& sp, const Monomial& m) {
    for (int i = 1; i <= sp.n; ++i)
        if (m.exp(i) != m.exp(sp.prime(i))) return false;
    if (sp.odd && m.exp(sp.n + 1) % 2 != 0) return false;
    return true;
}

QScalar h_functional(const Poly& p) {
    const Space sp(p.N());
    const QScalar qm2 = QScalar::qpow(-2);
    QScalar sum;
    for (const auto& [mono, c] : p.terms()) {
        if (!in_diagonal_support(sp, mono)) continue;
        const int m = sp.odd ? mono.exp(sp.n + 1) / 2 : 0;
        int nu_sum = 0;
        int two_rho_nu = 0;
        QScalar num = QScalar::one();
        for (int i = 1; i <= sp.n; ++i) {
            num = num * qpochhammer(qm2, qm2, mono.exp(i));
            nu_sum += mono.exp(i);
            two_rho_nu += sp.rho2(i) * mono.exp(i);
        }
        num = num * qpochhammer(QScalar::qpow(-1), qm2, m) *
              pow(QScalar::one() + QScalar::qpow(1), m);
        QScalar den = QScalar::tpow(two_rho_nu + 2 * m) *
                      pow(QScalar::one() + QScalar::qpow(sp.N - 2), nu_sum + m) *
                      qpochhammer(QScalar::qpow(-sp.N), qm2, nu_sum + m);
        sum += c * num / den;
    }
    return sum;
}

QScalar inner(const Poly& p1, const Poly& p2) {
    if (p1.N() != p2.N()) throw SpaceMismatch("inner: different spaces");
    return h_functional(multiply(star(p1), p2));
}

QMatrix gram(const std::vector<Poly>& basis) {
    const std::size_t n = basis.size();
    for (const Poly& p : basis)
        if (p.N() != basis.front().N()) throw SpaceMismatch("gram: different spaces");
    QMatrix g(n, std::vector<QScalar>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Poly si = star(basis[i]);
        for (std::size_t j = 0; j < n; ++j)
            g[i][j] = h_functional(multiply(si, basis[j]));
    }
    return g;
}

} // namespace qharm
