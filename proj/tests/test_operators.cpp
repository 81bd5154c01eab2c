#include <doctest.h>

#include "qharm/harmonic.hpp"
#include "qharm/operators.hpp"

using namespace qharm;

namespace {

Poly mono(int N, std::vector<int> nu, QScalar c = QScalar::one()) {
    Monomial m(N);
    m.nu = std::move(nu);
    return Poly::monomial(N, m, c);
}

Monomial mk(std::vector<int> nu) {
    Monomial m(static_cast<int>(nu.size()));
    m.nu = std::move(nu);
    return m;
}

} // namespace

TEST_CASE("q-derivatives on monomials") {
    const Space s3(3);
    CHECK(partial(s3, 1).apply(mk({1, 0, 0})) == Poly::one(3));
    // N=3: d_2 (x_1 x_2) = x_1
    CHECK(partial(s3, 2).apply(mk({1, 1, 0})) == mono(3, {1, 0, 0}));
    // N=3: d_3 (x_2^2) = [1][2] (q-q^{-1})/(1+q) q^{rho_1+2} q^{-2} x_1
    QScalar expect = qnum(2, QConvention::basic) *
                     (QScalar::qpow(1) - QScalar::qpow(-1)) /
                     (QScalar::one() + QScalar::qpow(1)) * QScalar::tpow(1 + 4) *
                     QScalar::qpow(-2);
    CHECK(partial(s3, 3).apply(mk({0, 2, 0})) == mono(3, {1, 0, 0}, expect));
    CHECK_THROWS_AS(partial(s3, 4), IndexOutOfRange);
    CHECK_THROWS_AS(partial(s3, 0), IndexOutOfRange);

    // degree shift bookkeeping
    CHECK(partial(s3, 1).degree_shift() == -1);
}

TEST_CASE("multiplication operators") {
    const Space s4(4);
    CHECK(xhat(s4, 1).apply(Monomial(4)) == Poly::generator(4, 1));
    Poly Q = q_radius(s4, 1);
    CHECK(qhat(s4).apply(Monomial(4)) == Q);
    CHECK(qhat(s4).apply(mk({1, 0, 0, 0})) == multiply(Poly::generator(4, 1), Q));
    // left multiplication, not right: xhat_2(x_1) = x_2 x_1 = q^{-1} x_1 x_2
    CHECK(xhat(s4, 2).apply(mk({1, 0, 0, 0})) == mono(4, {1, 1, 0, 0}, QScalar::qpow(-1)));
}

TEST_CASE("q-Laplacian values") {
    const Space s3(3);
    const LinearOperator lap3 = laplacian(s3, LaplacianMode::direct);
    CHECK(lap3.apply(mk({1, 0, 0})).is_zero());
    // Delta(Q) = [2][3] in the basic convention for N = 3
    Poly dq = lap3.apply(q_radius(s3, 1));
    CHECK(dq == Poly::constant(3, qnum(2, QConvention::basic) * qnum(3, QConvention::basic)));

    // Delta(x_{n+1}^2) = q (1 + q^{N-2}) for odd N
    for (int N : {3, 5}) {
        const Space sp(N);
        Monomial m(N);
        m.exp(sp.n + 1) = 2;
        CHECK(laplacian(sp, LaplacianMode::direct).apply(m) ==
              Poly::constant(N, QScalar::qpow(1) * (QScalar::one() + QScalar::qpow(N - 2))));
    }

    // composed and direct agree (spot check; the suite is exhaustive)
    const Space s5(5);
    const LinearOperator a = laplacian(s5, LaplacianMode::composed);
    const LinearOperator b = laplacian(s5, LaplacianMode::direct);
    for (const Monomial& m : monomials_of_degree(5, 3)) CHECK(a.apply(m) == b.apply(m));
}

TEST_CASE("diagonal operators") {
    const Space s3(3);
    Poly x12 = mono(3, {1, 1, 0});
    CHECK(diagonal(s3, DiagonalOp::gamma).apply(x12) == x12 * QScalar::from_int(2));
    CHECK(diagonal(s3, DiagonalOp::c).apply(x12) == x12 * QScalar::qpow(2));
    CHECK(diagonal(s3, DiagonalOp::c).apply(Poly::one(3)) == Poly::one(3));
    CHECK(diagonal(s3, DiagonalOp::c_inv).apply(x12) == x12 * QScalar::qpow(-2));
}

TEST_CASE("Chevalley actions") {
    const Space s3(3);
    // E_1 on x_2 for N=3: [nu_2] q^{nu_1 - nu_2 + 3/2} x_1 = q^{1/2} x_1
    CHECK(chevalley(s3, Generator::E, 1).apply(mk({0, 1, 0})) ==
          mono(3, {1, 0, 0}, QScalar::tpow(1)));

    // Khat_1 on x_1^a x_3^b has eigenvalue q^{a-b}
    CHECK(chevalley(s3, Generator::Khat, 1).apply(mk({2, 0, 1})) ==
          mono(3, {2, 0, 1}, QScalar::qpow(1)));

    for (int N = 3; N <= 6; ++N) {
        const Space sp(N);
        for (int k = 1; k <= sp.n; ++k) {
            CHECK(chevalley(sp, Generator::E, k).apply(Monomial(N)).is_zero());
            CHECK(chevalley(sp, Generator::F, k).apply(Monomial(N)).is_zero());
        }
        // K is printed for i < n only
        CHECK_THROWS_AS(chevalley(sp, Generator::K, sp.n), IndexOutOfRange);
        // weight compatibility of Khat
        for (const Monomial& m : monomials_of_degree(N, 2)) {
            auto wt = weight_of(sp, m);
            for (int i = 1; i <= sp.n; ++i) {
                Poly img = chevalley(sp, Generator::Khat, i).apply(m);
                CHECK(img == Poly::monomial(N, m,
                                            QScalar::qpow(wt[static_cast<std::size_t>(i - 1)])));
            }
        }
    }

    // E_k/F_k preserve total degree
    const Space s4(4);
    for (const Monomial& m : monomials_of_degree(4, 3)) {
        Poly img = chevalley(s4, Generator::E, 2).apply(m);
        if (!img.is_zero()) CHECK(img.degree() == 3);
    }
}

TEST_CASE("Euler operator") {
    const Space s4(4);
    const LinearOperator E = euler(s4);
    CHECK(E.apply(Monomial(4)).is_zero());
    CHECK(E.apply(mk({1, 0, 0, 0})) == mono(4, {1, 0, 0, 0}));
    // E h = [l]_q h on harmonics
    for (int l = 1; l <= 2; ++l)
        for (const auto& [lab, h] : xi_basis(4, l))
            CHECK(E.apply(h) == h * qnum(l, QConvention::symmetric));
}

TEST_CASE("operator combinators") {
    const Space s4(4);
    const LinearOperator d1 = partial(s4, 1);
    CHECK(operator_is_zero(op_commutator(d1, d1), 3));

    // first relation of (13) with k = 1: d_1 xhat_{1'} = q xhat_{1'} d_1
    LinearOperator rel = op_sub(op_compose(d1, xhat(s4, 4)),
                                op_scale(QScalar::qpow(1), op_compose(xhat(s4, 4), d1)));
    CHECK(operator_is_zero(rel, 4));

    // twisted commutator of Delta and Qhat on constants reproduces Delta(Q)
    const LinearOperator lap = laplacian(s4, LaplacianMode::direct);
    const LinearOperator Qh = qhat(s4);
    Poly v = op_commutator(lap, Qh).apply(Monomial(4));
    QScalar expect = QScalar::qpow(-4 + 3) * qnum(2, QConvention::basic) *
                     qnum(4, QConvention::basic) *
                     pow(QScalar::one() + QScalar::qpow(2), 2) /
                     pow(QScalar::one() + QScalar::qpow(1), 2);
    CHECK(v == Poly::constant(4, expect));

    CHECK_THROWS_AS(op_add(op_zero(3), op_zero(4)), SpaceMismatch);

    // degree shift combination rules
    CHECK(op_compose(lap, Qh).degree_shift() == 0);
    CHECK(op_add(lap, lap).degree_shift() == -2);
    CHECK(!op_add(lap, Qh).degree_shift().has_value());
}
