#include <doctest.h>

#include "qharm/harmonic.hpp"
#include "qharm/ratmat.hpp"

using namespace qharm;

namespace {

Poly mono(int N, std::vector<int> nu, QScalar c = QScalar::one()) {
    Monomial m(N);
    m.nu = std::move(nu);
    return Poly::monomial(N, m, c);
}

} // namespace

TEST_CASE("dimension formulas") {
    CHECK(dim_harmonic(3, 2) == 5);
    CHECK(dim_harmonic(4, 3) == 16);
    CHECK(dim_full(3, 2) == 6);
    for (int N = 3; N <= 7; ++N) CHECK(dim_harmonic(N, 0) == 1);
    // N = 2 base case from the two-commuting-variables picture
    CHECK(dim_harmonic(2, 0) == 1);
    CHECK(dim_harmonic(2, 5) == 2);
    CHECK_THROWS_AS(dim_harmonic(1, 0), InvalidDimension);
    // telescoping consistency
    for (int N = 3; N <= 7; ++N)
        for (int m = 2; m <= 6; ++m)
            CHECK(dim_harmonic(N, m) == dim_full(N, m) - dim_full(N, m - 2));
}

TEST_CASE("harmonic projector") {
    // degree <= 1 is fixed
    for (int i = 1; i <= 3; ++i) CHECK(project(Poly::generator(3, i)) == Poly::generator(3, i));

    // frozen example: H(x_2^2) = x_2^2 - q/(1+q+q^2) Q for N = 3
    const Space s3(3);
    Poly expected = mono(3, {0, 2, 0}) -
                    q_radius(s3, 1) * (QScalar::qpow(1) /
                                       (QScalar::one() + QScalar::qpow(1) + QScalar::qpow(2)));
    CHECK(project(mono(3, {0, 2, 0})) == expected);

    // H(Q) = 0 (no harmonic multiples of Q)
    for (int N = 3; N <= 6; ++N) CHECK(project(q_radius(Space(N), 1)).is_zero());

    CHECK_THROWS_AS(project(Poly::one(3) + Poly::generator(3, 1)), NotHomogeneous);

    // alpha_0 = 1
    CHECK(projector_alpha(5, 4, 0).is_one());
}

TEST_CASE("exact division by Q") {
    const Space s4(4);
    Poly Q = q_radius(s4, 1);
    Poly p = multiply(Q, Poly::generator(4, 2) + mono(4, {0, 0, 0, 2}, QScalar::qpow(3)));
    CHECK(divide_by_q_radius(p) ==
          Poly::generator(4, 2) + mono(4, {0, 0, 0, 2}, QScalar::qpow(3)));
    CHECK_THROWS_AS(divide_by_q_radius(mono(4, {2, 0, 0, 0})), InternalError);
}

TEST_CASE("harmonic decomposition") {
    const Space s3(3);
    Poly Q = q_radius(s3, 1);

    Poly h = project(mono(3, {0, 2, 0}));
    auto d1 = harmonic_decompose(h);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].first == 0);
    CHECK(d1[0].second == h);

    auto d2 = harmonic_decompose(Q);
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].first == 1);
    CHECK(d2[0].second == Poly::one(3));

    auto d3 = harmonic_decompose(mono(3, {0, 2, 0}));
    REQUIRE(d3.size() == 2);
    CHECK(d3[0].second == h);
    CHECK(d3[1].second ==
          Poly::constant(3, QScalar::qpow(1) /
                                (QScalar::one() + QScalar::qpow(1) + QScalar::qpow(2))));
}

TEST_CASE("zonal polynomials") {
    CHECK(zonal(4, 1, 0) == Poly::generator(4, 1));
    CHECK(zonal(5, 3, 0) == mono(5, {3, 0, 0, 0, 0}));
    CHECK(zonal(4, 0, 2) == mono(4, {0, 0, 0, 2}));

    // frozen worked value: zonal(4,1,1) = q^2/(1+q^2) x1x4 - q/(1+q^2) x2x3
    Poly z = zonal(4, 1, 1);
    QScalar d = QScalar::one() + QScalar::qpow(2);
    CHECK(z == mono(4, {1, 0, 0, 1}, QScalar::qpow(2) / d) +
                   mono(4, {0, 1, 1, 0}, -QScalar::qpow(1) / d));
    // and it is the projection of x_1 x_4
    CHECK(z == project(mono(4, {1, 0, 0, 1})));
}

TEST_CASE("t-polynomials") {
    CHECK(t_poly(4, 2, 1, 1, 0) == zonal(4, 1, 1));
    CHECK(t_poly(5, 4, 2, 0, 2) == mono(5, {2, 0, 0, 0, 0}));
    CHECK_THROWS_AS(t_poly(4, 3, 1, 1, 0), DegreeMismatch);

    // factorization property (45) on one inner harmonic
    const int N = 4;
    Poly h = embed(xi_basis(N - 2, 1)[0].second, 1, N);
    Poly lhs = project(multiply(mono(N, {1, 0, 0, 1}), h));
    Poly rhs = multiply(t_poly(N, 3, 1, 1, 1), h);
    CHECK(lhs == rhs);
}

TEST_CASE("middle-variable closed form") {
    CHECK(closed_form_middle(3, 0) == Poly::one(3));
    CHECK(closed_form_middle(3, 1) == Poly::generator(3, 2));
    CHECK(closed_form_middle(3, 2) == project(mono(3, {0, 2, 0})));
    CHECK(closed_form_middle(5, 3) == project(mono(5, {0, 0, 3, 0, 0})));
    CHECK_THROWS_AS(closed_form_middle(4, 2), InvalidDimension);

    // Jacobi coefficient route agrees
    for (int m = 0; m <= 4; ++m) {
        const Space s5(5);
        auto c = closed_form_middle_jacobi_coeffs(5, m);
        Poly viajac(5);
        Poly Q = q_radius(s5, 1);
        Poly Qk = Poly::one(5);
        for (int k = 0; 2 * k <= m; ++k) {
            Monomial mm(5);
            mm.exp(3) = m - 2 * k;
            viajac += multiply(Qk, Poly::monomial(5, mm, c[static_cast<std::size_t>(k)]));
            Qk = multiply(Qk, Q);
        }
        CHECK(viajac == closed_form_middle(5, m));
    }
}

TEST_CASE("xi bases") {
    auto b0 = xi_basis(5, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].second == Poly::one(5));

    // N=3, m=1: x_2, x_3, x_1 in label-lexicographic order
    auto b31 = xi_basis(3, 1);
    REQUIRE(b31.size() == 3);
    CHECK(b31[0].first.str() == "(0,0|1)");
    CHECK(b31[0].second == Poly::generator(3, 2));
    CHECK(b31[1].first.str() == "(0,1|0)");
    CHECK(b31[1].second == Poly::generator(3, 3));
    CHECK(b31[2].first.str() == "(1,0|0)");
    CHECK(b31[2].second == Poly::generator(3, 1));

    // N=4, m=1: x_3 (k=-1), x_2 (k=+1), x_4, x_1
    auto b41 = xi_basis(4, 1);
    REQUIRE(b41.size() == 4);
    CHECK(b41[0].second == Poly::generator(4, 3));
    CHECK(b41[1].second == Poly::generator(4, 2));
    CHECK(b41[2].second == Poly::generator(4, 4));
    CHECK(b41[3].second == Poly::generator(4, 1));

    // counts match the dimension formula
    for (int m = 0; m <= 3; ++m) {
        CHECK(mpz_class(static_cast<long>(xi_basis(4, m).size())) == dim_harmonic(4, m));
        CHECK(mpz_class(static_cast<long>(xi_basis(5, m).size())) == dim_harmonic(5, m));
    }

    // N = 2 base case: 1, x_1^m, x_2^m
    auto b2 = xi_basis(2, 3);
    REQUIRE(b2.size() == 2);
    CHECK(b2[0].second == mono(2, {0, 3}));
    CHECK(b2[1].second == mono(2, {3, 0}));
    REQUIRE(xi_basis(2, 0).size() == 1);

    // every element is harmonic and the family has full rank
    for (int N : {4, 5}) {
        const Space sp(N);
        const LinearOperator lap = laplacian(sp, LaplacianMode::direct);
        for (int m = 1; m <= 2; ++m) {
            auto basis = xi_basis(N, m);
            std::vector<Poly> fam;
            for (const auto& [lab, xi] : basis) {
                CHECK(lap.apply(xi).is_zero());
                fam.push_back(xi);
            }
            const auto monos = monomials_of_degree(N, m);
            QMatrix a(fam.size(), std::vector<QScalar>(monos.size()));
            for (std::size_t i = 0; i < fam.size(); ++i)
                for (std::size_t j = 0; j < monos.size(); ++j)
                    a[i][j] = fam[i].coeff(monos[j]);
            CHECK(rank_fraction_free(a) == static_cast<int>(fam.size()));
        }
    }
}

TEST_CASE("zonal product representation via Q'") {
    // cross-check of the x_1-power-times-radial form against the direct sum,
    // with the index read as m'_1 and the Q'-power as m'_1 - k
    for (int N : {4, 5}) {
        const Space sp(N);
        const QScalar q2 = QScalar::qpow(2);
        Poly Q1p = q_radius(sp, 1) * (sp.q_rho(1) / (QScalar::one() + QScalar::qpow(N - 2)));
        Poly Q2p = q_radius(sp, 2) * (sp.q_rho(1) / (QScalar::one() + QScalar::qpow(N - 4)));
        const int two_eps = sp.odd ? 1 : 2;
        for (auto [m1, m1p] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}}) {
            const int m = m1 + m1p;
            Poly sum(N);
            for (int k = 0; k <= m1p; ++k) {
                QScalar ck = qpochhammer(QScalar::qpow(-2 * m1), q2, k) *
                             qpochhammer(QScalar::qpow(-2 * m1p), q2, k) *
                             QScalar::tpow((-2 * sp.n + two_eps + 4) * k) /
                             (qpochhammer(q2, q2, k) *
                              qpochhammer(QScalar::qpow(-N - 2 * m + 4), q2, k) *
                              pow(QScalar::one() + QScalar::qpow(N - 2), k));
                Poly term = Poly::constant(N, ck);
                for (int i = 0; i < k; ++i) term = multiply(term, q_radius(sp, 1));
                for (int i = 0; i < m1p - k; ++i)
                    term = multiply(term, Q1p - Q2p * QScalar::qpow(2 * i));
                sum += term;
            }
            Monomial xpow(N);
            xpow.exp(1) = m1 - m1p;
            CHECK(zonal(N, m1, m1p) == multiply(Poly::monomial(N, xpow, QScalar::one()), sum));
        }
    }
}

TEST_CASE("fraction-free rank") {
    // 2x2 singular vs regular over Q(t)
    QScalar q = QScalar::qpow(1);
    QMatrix sing = {{QScalar::one(), q}, {q, q * q}};
    CHECK(rank_fraction_free(sing) == 1);
    QMatrix reg = {{QScalar::one(), q}, {q, QScalar::one()}};
    CHECK(rank_fraction_free(reg) == 2);
    CHECK(rank_at_point(reg, mpq_class(4, 5)) == 2);
    CHECK(rank_at_point(sing, mpq_class(4, 5)) == 1);
    CHECK(rank_fraction_free({}) == 0);
}
