#include <doctest.h>

#include "qharm/harmonic.hpp"
#include "qharm/sphere.hpp"

using namespace qharm;

namespace {

Poly mono(int N, std::vector<int> nu, QScalar c = QScalar::one()) {
    Monomial m(N);
    m.nu = std::move(nu);
    return Poly::monomial(N, m, c);
}

} // namespace

TEST_CASE("diagonal support predicate") {
    const Space s3(3);
    Monomial a(3);
    a.nu = {1, 0, 1};
    CHECK(in_diagonal_support(s3, a));
    a.nu = {0, 2, 0};
    CHECK(in_diagonal_support(s3, a));
    a.nu = {0, 1, 0};
    CHECK(!in_diagonal_support(s3, a)); // odd middle exponent
    a.nu = {1, 0, 0};
    CHECK(!in_diagonal_support(s3, a));

    const Space s4(4);
    Monomial b(4);
    b.nu = {1, 2, 2, 1};
    CHECK(in_diagonal_support(s4, b));
    b.nu = {1, 2, 1, 1};
    CHECK(!in_diagonal_support(s4, b));
}

TEST_CASE("invariant functional values") {
    CHECK(h_functional(Poly::one(3)).is_one());
    const QScalar den = QScalar::one() + QScalar::qpow(1) + QScalar::qpow(2);
    CHECK(h_functional(mono(3, {1, 0, 1})) == QScalar::tpow(1) / den);
    CHECK(h_functional(mono(3, {0, 2, 0})) == QScalar::qpow(1) / den);
    CHECK(h_functional(mono(3, {1, 0, 0})).is_zero());

    for (int N = 3; N <= 6; ++N) {
        const Space sp(N);
        CHECK(h_functional(q_radius(sp, 1)).is_one());
    }
}

TEST_CASE("functional factors through the quantum sphere") {
    for (int N = 3; N <= 5; ++N) {
        const Space sp(N);
        const Poly Q = q_radius(sp, 1);
        for (int m = 0; m <= 3; ++m)
            for (const Monomial& mm : monomials_of_degree(N, m)) {
                Poly p = Poly::monomial(N, mm, QScalar::one());
                CHECK(h_functional(multiply(Q, p)) == h_functional(p));
            }
    }
}

TEST_CASE("scalar product") {
    CHECK(inner(Poly::one(3), Poly::one(3)).is_one());
    // frozen value: <x_1, x_1> = q/(1+q+q^2) for N = 3
    CHECK(inner(Poly::generator(3, 1), Poly::generator(3, 1)) ==
          QScalar::qpow(1) / (QScalar::one() + QScalar::qpow(1) + QScalar::qpow(2)));
    CHECK_THROWS_AS(inner(Poly::one(3), Poly::one(4)), SpaceMismatch);

    // cross-degree orthogonality samples (Prop 4)
    for (const auto& [la, ha] : xi_basis(4, 1))
        for (const auto& [lb, hb] : xi_basis(4, 2)) CHECK(inner(ha, hb).is_zero());
}

TEST_CASE("Gram matrices") {
    auto g1 = gram({Poly::one(4)});
    REQUIRE(g1.size() == 1);
    CHECK(g1[0][0].is_one());

    std::vector<Poly> fam;
    for (const auto& [lab, xi] : xi_basis(3, 1)) fam.push_back(xi);
    auto g = gram(fam);
    REQUIRE(g.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) {
                CHECK(!g[i][j].is_zero());
                CHECK(g[i][j].eval_at(mpq_class(4, 5)) > 0);
            } else {
                CHECK(g[i][j].is_zero());
            }
        }

    // zonal family of fixed degree is orthogonal (Thm 1 instance)
    std::vector<Poly> zf;
    for (int m1 = 0; m1 <= 2; ++m1) zf.push_back(zonal(4, m1, 2 - m1));
    auto gz = gram(zf);
    for (std::size_t i = 0; i < gz.size(); ++i)
        for (std::size_t j = 0; j < gz.size(); ++j)
            CHECK(gz[i][j].is_zero() == (i != j));
}
