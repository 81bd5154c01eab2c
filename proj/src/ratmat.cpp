#include "qharm/ratmat.hpp"

#include <utility>

namespace qharm {

namespace {

// Generic fraction-free elimination over an exact GCD domain.
template <class T, class IsZero, class Mul, class Sub, class DivExact>
int bareiss_rank(std::vector<std::vector<T>> a, const T& one, IsZero is_zero, Mul mul,
                 Sub sub, DivExact divexact) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    T prev = one;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                T t = sub(mul(a[r][c], a[i][j]), mul(a[i][c], a[r][j]));
                a[i][j] = divexact(t, prev);
            }
            a[i][c] = T(); // zero value
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int rank_fraction_free(const QMatrix& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    // Clear denominators row by row (row scaling preserves rank).
    std::vector<std::vector<ZPoly>> a(rows, std::vector<ZPoly>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        ZPoly lcm(1);
        for (std::size_t j = 0; j < cols; ++j) {
            const ZPoly& d = m[i][j].den();
            lcm = lcm * d.divexact(ZPoly::gcd(lcm, d));
        }
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = m[i][j].num() * lcm.divexact(m[i][j].den());
    }
    return bareiss_rank<ZPoly>(
        std::move(a), ZPoly(1), [](const ZPoly& v) { return v.is_zero(); },
        [](const ZPoly& x, const ZPoly& y) { return x * y; },
        [](const ZPoly& x, const ZPoly& y) { return x - y; },
        [](const ZPoly& x, const ZPoly& y) { return x.divexact(y); });
}

int rank_at_point(const QMatrix& m, const mpq_class& t0) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<mpq_class> row(cols);
        mpz_class lcm(1);
        for (std::size_t j = 0; j < cols; ++j) {
            row[j] = m[i][j].eval_at(t0);
            mpz_class d = row[j].get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            lcm = lcm / g * d;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            mpq_class v = row[j] * mpq_class(lcm);
            v.canonicalize();
            a[i][j] = v.get_num(); // denominator is 1 now
        }
    }
    return bareiss_rank<mpz_class>(
        std::move(a), mpz_class(1), [](const mpz_class& v) { return v == 0; },
        [](const mpz_class& x, const mpz_class& y) { return mpz_class(x * y); },
        [](const mpz_class& x, const mpz_class& y) { return mpz_class(x - y); },
        [](const mpz_class& x, const mpz_class& y) {
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            if (r != 0) throw InternalError("rank_at_point: inexact Bareiss division");
            return q;
        });
}

} // namespace qharm
