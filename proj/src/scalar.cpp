#include "qharm/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qharm {

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(long v) {
    if (v != 0) c_.push_back(mpz_class(v));
}

ZPoly::ZPoly(mpz_class v) {
    if (v != 0) c_.push_back(std::move(v));
}

ZPoly ZPoly::tpow(int k) {
    ZPoly p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
    p.c_.back() = 1;
    return p;
}

ZPoly ZPoly::from_coeffs(std::vector<mpz_class> c) {
    ZPoly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool ZPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

int ZPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

const mpz_class& ZPoly::coeff(int i) const {
    static const mpz_class z(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return z;
    return c_[static_cast<std::size_t>(i)];
}

const mpz_class& ZPoly::lead() const {
    static const mpz_class z(0);
    return c_.empty() ? z : c_.back();
}

bool ZPoly::is_monomial() const {
    int nz = 0;
    for (const auto& v : c_)
        if (v != 0) ++nz;
    return nz <= 1;
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    ZPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

ZPoly ZPoly::operator*(const mpz_class& v) const {
    if (v == 0) return ZPoly();
    ZPoly r = *this;
    for (auto& x : r.c_) x *= v;
    return r;
}

ZPoly ZPoly::mul_tpow(int k) const {
    if (is_zero() || k == 0) return *this;
    ZPoly r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<std::size_t>(k)] = c_[i];
    return r;
}

ZPoly ZPoly::shift_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (valuation() < k) throw InternalError("ZPoly::shift_down: valuation too small");
    ZPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("ZPoly: division by zero polynomial");
    if (is_zero()) return ZPoly();
    if (degree() < d.degree()) throw InternalError("ZPoly::divexact: inexact division");
    ZPoly rem = *this;
    ZPoly quo;
    quo.c_.assign(static_cast<std::size_t>(degree() - d.degree()) + 1, mpz_class(0));
    const mpz_class& dl = d.lead();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        mpz_class q;
        mpz_class r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.lead().get_mpz_t(), dl.get_mpz_t());
        if (r != 0) throw InternalError("ZPoly::divexact: inexact division");
        int k = rem.degree() - d.degree();
        quo.c_[static_cast<std::size_t>(k)] = q;
        rem = rem - d.mul_tpow(k) * q;
    }
    if (!rem.is_zero()) throw InternalError("ZPoly::divexact: nonzero remainder");
    quo.trim();
    return quo;
}

ZPoly ZPoly::divexact(const mpz_class& v) const {
    if (v == 0) throw DivisionByZero("ZPoly: division by zero");
    ZPoly r = *this;
    for (auto& x : r.c_) {
        mpz_class q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), x.get_mpz_t(), v.get_mpz_t());
        if (rr != 0) throw InternalError("ZPoly::divexact: inexact scalar division");
        x = q;
    }
    return r;
}

mpz_class ZPoly::content() const {
    mpz_class g(0);
    for (const auto& v : c_) {
        if (v == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

namespace {

// Pseudo-remainder of f by g, deg f >= deg g >= 1.
ZPoly prem(ZPoly f, const ZPoly& g) {
    const mpz_class& gl = g.lead();
    while (!f.is_zero() && f.degree() >= g.degree()) {
        int k = f.degree() - g.degree();
        mpz_class fl = f.lead();
        f = f * gl - g.mul_tpow(k) * fl;
    }
    return f;
}

ZPoly primitive(const ZPoly& p) {
    if (p.is_zero()) return p;
    ZPoly r = p.divexact(p.content());
    if (r.lead() < 0) return -r;
    return r;
}

} // namespace

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) {
        if (b.is_zero()) return ZPoly();
        return b.lead() < 0 ? -b : b;
    }
    if (b.is_zero()) return a.lead() < 0 ? -a : a;

    mpz_class ca = a.content(), cb = b.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    ZPoly pa = a.divexact(ca);
    ZPoly pb = b.divexact(cb);
    const int v = std::min(pa.valuation(), pb.valuation());
    if (v > 0) {
        pa = pa.shift_down(v);
        pb = pb.shift_down(v);
    }

    ZPoly g(1);
    if (pa.degree() > 0 && pb.degree() > 0) {
        ZPoly f = pa.degree() >= pb.degree() ? pa : pb;
        ZPoly s = pa.degree() >= pb.degree() ? pb : pa;
        while (!s.is_zero() && s.degree() > 0) {
            ZPoly r = prem(f, s);
            f = s;
            s = primitive(r);
        }
        g = s.is_zero() ? primitive(f) : ZPoly(1);
    }

    ZPoly res = (g * c).mul_tpow(v);
    if (res.lead() < 0) res = -res;
    return res;
}

mpq_class ZPoly::eval(const mpq_class& t0) const {
    mpq_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * t0 + mpq_class(*it);
    }
    return acc;
}

// -------------------------------------------------------------- QScalar

QScalar QScalar::make(ZPoly num, ZPoly den) {
    if (den.is_zero()) throw DivisionByZero("QScalar: zero denominator");
    if (num.is_zero()) return QScalar();
    ZPoly g = ZPoly::gcd(num, den);
    num = num.divexact(g);
    den = den.divexact(g);
    if (den.lead() < 0) {
        num = -num;
        den = -den;
    }
    return QScalar(std::move(num), std::move(den));
}

QScalar QScalar::rational(long p, long q) {
    return make(ZPoly(p), ZPoly(q));
}

QScalar QScalar::from_mpq(const mpq_class& v) {
    return make(ZPoly(mpz_class(v.get_num())), ZPoly(mpz_class(v.get_den())));
}

QScalar QScalar::tpow(int k) {
    if (k >= 0) return QScalar(ZPoly::tpow(k), ZPoly(1));
    return QScalar(ZPoly(1), ZPoly::tpow(-k));
}

const QScalar& QScalar::zero() {
    static const QScalar z;
    return z;
}

const QScalar& QScalar::one() {
    static const QScalar o = from_int(1);
    return o;
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::inv() const {
    if (is_zero()) throw DivisionByZero("QScalar: inverse of zero");
    ZPoly n = den_, d = num_;
    if (d.lead() < 0) {
        n = -n;
        d = -d;
    }
    return QScalar(std::move(n), std::move(d));
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return QScalar::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return -b;
    return QScalar::make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    if (a.is_zero() || b.is_zero()) return QScalar();
    // Inputs canonical: cross-reduce, then the product is canonical.
    ZPoly g1 = ZPoly::gcd(a.num_, b.den_);
    ZPoly g2 = ZPoly::gcd(b.num_, a.den_);
    ZPoly n = a.num_.divexact(g1) * b.num_.divexact(g2);
    ZPoly d = a.den_.divexact(g2) * b.den_.divexact(g1);
    if (d.lead() < 0) {
        n = -n;
        d = -d;
    }
    return QScalar(std::move(n), std::move(d));
}

QScalar operator/(const QScalar& a, const QScalar& b) {
    return a * b.inv();
}

mpq_class QScalar::eval_at(const mpq_class& t0) const {
    mpq_class d = den_.eval(t0);
    if (d == 0) throw PoleAtPoint("QScalar: pole at evaluation point");
    mpq_class r = num_.eval(t0) / d;
    r.canonicalize();
    return r;
}

namespace {

// One side of the fraction, rendered in q / q^(1/2) powers, ascending.
std::string zpoly_str(const ZPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const mpz_class& c = p.coeff(i);
        if (c == 0) continue;
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string power;
        if (i == 0) {
            power.clear();
        } else if (i == 2) {
            power = "q";
        } else if (i % 2 == 0) {
            power = "q^" + std::to_string(i / 2);
        } else {
            power = "q^(" + std::to_string(i) + "/2)";
        }
        if (power.empty()) {
            os << a.get_str();
        } else if (a == 1) {
            os << power;
        } else {
            os << a.get_str() << "*" << power;
        }
    }
    return os.str();
}

int zpoly_term_count(const ZPoly& p) {
    int n = 0;
    for (const auto& v : p.coeffs())
        if (v != 0) ++n;
    return n;
}

} // namespace

std::string QScalar::str() const {
    if (is_zero()) return "0";
    std::string ns = zpoly_str(num_);
    if (den_.is_one()) return ns;
    std::string ds = zpoly_str(den_);
    if (zpoly_term_count(num_) > 1) ns = "(" + ns + ")";
    // a lone denominator factor like "7*q^2" would reassociate as (a/7)*q^2
    if (zpoly_term_count(den_) > 1 || ds.find('*') != std::string::npos) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

QScalar pow(const QScalar& base, long e) {
    if (e < 0) return pow(base.inv(), -e);
    QScalar r = QScalar::one();
    QScalar b = base;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------- q-functions

QScalar qnum(long a, QConvention conv) {
    const QScalar one = QScalar::one();
    if (conv == QConvention::basic) {
        return (one - QScalar::qpow(static_cast<int>(a))) / (one - QScalar::qpow(1));
    }
    return (QScalar::qpow(static_cast<int>(a)) - QScalar::qpow(static_cast<int>(-a))) /
           (QScalar::qpow(1) - QScalar::qpow(-1));
}

QScalar qnum_symmetric_half(long two_a) {
    return (QScalar::tpow(static_cast<int>(two_a)) - QScalar::tpow(static_cast<int>(-two_a))) /
           (QScalar::qpow(1) - QScalar::qpow(-1));
}

QScalar qfactorial(long m, QConvention conv) {
    if (m < 0) throw IndexOutOfRange("qfactorial: negative argument");
    QScalar r = QScalar::one();
    for (long i = 1; i <= m; ++i) r = r * qnum(i, conv);
    return r;
}

QScalar qdouble_factorial(long s, QConvention conv) {
    if (s < 0) throw IndexOutOfRange("qdouble_factorial: negative argument");
    QScalar r = QScalar::one();
    for (long i = s; i >= 1; i -= 2) r = r * qnum(i, conv);
    return r;
}

QScalar qpochhammer(const QScalar& a, const QScalar& base, long s) {
    if (s < 0) throw IndexOutOfRange("qpochhammer: negative length");
    QScalar r = QScalar::one();
    QScalar f = a;
    for (long i = 0; i < s; ++i) {
        r = r * (QScalar::one() - f);
        if (r.is_zero()) return r;
        f = f * base;
    }
    return r;
}

std::vector<QScalar> phi21_coeffs(const QScalar& a1, const QScalar& a2,
                                  const QScalar& b, const QScalar& base) {
    std::vector<QScalar> coeffs{QScalar::one()};
    QScalar term = QScalar::one();
    QScalar bp = QScalar::one(); // base^{k-1}
    QScalar bk = base;           // base^k
    const QScalar one = QScalar::one();
    for (int k = 1;; ++k) {
        QScalar f1 = one - a1 * bp;
        QScalar f2 = one - a2 * bp;
        if (f1.is_zero() || f2.is_zero()) break; // the series terminates here
        QScalar g1 = one - bk;
        QScalar g2 = one - b * bp;
        if (g1.is_zero() || g2.is_zero())
            throw DivisionByZero("phi21: denominator Pochhammer factor vanishes before termination");
        term = term * f1 * f2 / (g1 * g2);
        coeffs.push_back(term);
        bp = bk;
        bk = bk * base;
        if (k > 512) throw Error("phi21: series does not terminate");
    }
    return coeffs;
}

QScalar phi21(const QScalar& a1, const QScalar& a2, const QScalar& b,
              const QScalar& base, const QScalar& z) {
    QScalar sum;
    QScalar zp = QScalar::one();
    for (const QScalar& c : phi21_coeffs(a1, a2, b, base)) {
        sum += c * zp;
        zp = zp * z;
    }
    return sum;
}

std::vector<QScalar> little_q_jacobi(long k, int two_alpha, int two_beta, int base_q_exp) {
    if (k < 0) throw IndexOutOfRange("little_q_jacobi: negative degree");
    const int be = base_q_exp;
    QScalar base = QScalar::qpow(be);
    QScalar a1 = QScalar::tpow(static_cast<int>(-2 * be * k));
    QScalar a2 = QScalar::tpow(be * (two_alpha + two_beta + 2 * static_cast<int>(k) + 2));
    QScalar b = QScalar::tpow(be * (two_alpha + 2));
    std::vector<QScalar> c = phi21_coeffs(a1, a2, b, base);
    c.resize(static_cast<std::size_t>(k) + 1, QScalar::zero());
    // argument of the defining 2phi1 is base*x
    QScalar bp = QScalar::one();
    for (auto& v : c) {
        v = v * bp;
        bp = bp * base;
    }
    return c;
}

} // namespace qharm
