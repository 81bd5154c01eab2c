#include <doctest.h>

#include "qharm/jsonio.hpp"
#include "qharm/parse.hpp"

using namespace qharm;

namespace {

Poly mono(int N, std::vector<int> nu, QScalar c = QScalar::one()) {
    Monomial m(N);
    m.nu = std::move(nu);
    return Poly::monomial(N, m, c);
}

} // namespace

TEST_CASE("grammar fixtures") {
    CHECK(parse_poly("x1^2 x3", 3) == mono(3, {2, 0, 1}));

    // juxtaposition keeps written order; the product is normal-ordered
    CHECK(parse_poly("x3 x1", 3) ==
          mono(3, {1, 0, 1}) + mono(3, {0, 2, 0}, QScalar::tpow(1) - QScalar::tpow(-1)));

    CHECK(parse_poly("(1-q)/(1+q) * x2", 3) ==
          mono(3, {0, 1, 0},
               (QScalar::one() - QScalar::qpow(1)) / (QScalar::one() + QScalar::qpow(1))));

    // precedence: ^ binds tighter than juxtaposition, which ties with * and /
    CHECK(parse_poly("x1 x2^2", 4) == mono(4, {1, 2, 0, 0}));
    CHECK(parse_poly("2 x1", 3) == mono(3, {1, 0, 0}, QScalar::from_int(2)));
    CHECK(parse_poly("q^(1/2) x2", 3) == mono(3, {0, 1, 0}, QScalar::tpow(1)));
    CHECK(parse_poly("q^(-3/2)", 3) == Poly::constant(3, QScalar::tpow(-3)));
    CHECK(parse_poly("q^-1", 3) == Poly::constant(3, QScalar::qpow(-1)));
    CHECK(parse_poly("-x1 + 2", 3) == -mono(3, {1, 0, 0}) + Poly::constant(3, QScalar::from_int(2)));
    CHECK(parse_poly("(x1+x2)^2", 3) ==
          multiply(parse_poly("x1+x2", 3), parse_poly("x1+x2", 3)));
    CHECK(parse_poly("1/2", 3) == Poly::constant(3, QScalar::rational(1, 2)));

    CHECK(parse_scalar("(1 - q^2)/(1 + q + q^2)") ==
          (QScalar::one() - QScalar::qpow(2)) /
              (QScalar::one() + QScalar::qpow(1) + QScalar::qpow(2)));
}

TEST_CASE("errors carry positions and kinds") {
    CHECK_THROWS_AS(parse_poly("x1 +", 3), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x1", 3), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x1 $ x2", 3), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x5", 3), IndexOutOfRange);
    CHECK_THROWS_AS(parse_poly("x0", 3), IndexOutOfRange);
    CHECK_THROWS_AS(parse_poly("x1 / x2", 3), SyntaxError); // non-scalar divisor
    CHECK_THROWS_AS(parse_poly("x1 / 0", 3), DivisionByZero);
    CHECK_THROWS_AS(parse_poly("(1+q)^(1/2)", 3), SyntaxError);
    CHECK_THROWS_AS(parse_scalar("x1"), SyntaxError);
    try {
        parse_poly("x1 + $", 3);
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("round-trips") {
    const Space s3(3);
    Poly q = q_radius(s3, 1);
    CHECK(q.str() == "((1 + q)/q^(1/2))*x1*x3 + q*x2^2");
    CHECK(parse_poly(q.str(), 3) == q);
    CHECK(poly_from_json(poly_to_json(q)) == q);

    Poly z = Poly::zero(4);
    CHECK(z.str() == "0");
    CHECK(parse_poly(z.str(), 4) == z);
    CHECK(poly_from_json(poly_to_json(z)) == z);

    // negative and fractional coefficients
    Poly p = mono(4, {1, 0, 0, 0}, QScalar::from_int(-2)) +
             mono(4, {0, 1, 0, 2}, QScalar::rational(3, 7) * QScalar::tpow(-5));
    CHECK(parse_poly(p.str(), 4) == p);
    CHECK(poly_from_json(poly_to_json(p)) == p);
}

TEST_CASE("json schema shape") {
    const Space s3(3);
    json j = poly_to_json(q_radius(s3, 1));
    CHECK(j.at("N") == 3);
    REQUIRE(j.at("terms").size() == 2);
    // graded-lex order, leading first
    CHECK(j.at("terms")[0].at("nu") == json::array({1, 0, 1}));
    CHECK(j.at("terms")[1].at("nu") == json::array({0, 2, 0}));
    CHECK(j.at("terms")[0].at("coeff") == "(1 + q)/q^(1/2)");
}
