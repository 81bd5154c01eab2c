#include "qharm/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qharm {

// ---------------------------------------------------------------- Space

Space::Space(int N_) : N(N_) {
    if (N < 2) throw InvalidDimension("Space: N must be >= 2");
    n = N / 2;
    odd = (N % 2) != 0;
    rho2_.assign(static_cast<std::size_t>(N) + 1, 0);
    for (int i = 1; i <= n; ++i) rho2_[static_cast<std::size_t>(i)] = odd ? 2 * (n - i) + 1 : 2 * (n - i);
    if (odd) rho2_[static_cast<std::size_t>(n) + 1] = 0;
    for (int i = n + 1; i <= N; ++i) rho2_[static_cast<std::size_t>(i)] = -rho2_[static_cast<std::size_t>(N - i + 1)];
}

Space make_space(int N) { return Space(N); }

// ------------------------------------------------------------- Monomial

int Monomial::degree() const {
    return std::accumulate(nu.begin(), nu.end(), 0);
}

// ----------------------------------------------------------------- Poly

Poly Poly::one(int N) { return constant(N, QScalar::one()); }

Poly Poly::constant(int N, const QScalar& c) {
    Poly p(N);
    if (!c.is_zero()) p.terms_.emplace(Monomial(N), c);
    return p;
}

Poly Poly::generator(int N, int i) {
    if (i < 1 || i > N) throw IndexOutOfRange("generator index out of range");
    Monomial m(N);
    m.exp(i) = 1;
    Poly p(N);
    p.terms_.emplace(std::move(m), QScalar::one());
    return p;
}

Poly Poly::monomial(int N, Monomial m, QScalar c) {
    if (m.size() != N) throw SpaceMismatch("monomial length differs from N");
    Poly p(N);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree(); // leading term has maximal degree
}

bool Poly::homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    if (deg) *deg = d;
    return true;
}

QScalar Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? QScalar::zero() : it->second;
}

bool Poly::scalar_value(QScalar* out) const {
    if (terms_.empty()) {
        if (out) *out = QScalar::zero();
        return true;
    }
    if (terms_.size() == 1 && terms_.begin()->first.degree() == 0) {
        if (out) *out = terms_.begin()->second;
        return true;
    }
    return false;
}

void Poly::add_term(const Monomial& m, const QScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(N_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (N_ != o.N_) throw SpaceMismatch("Poly +=: different spaces");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (N_ != o.N_) throw SpaceMismatch("Poly -=: different spaces");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const QScalar& c) const {
    Poly r(N_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

// ------------------------------------------------------ normal ordering

namespace {

Monomial word_to_monomial(int N, const std::vector<int>& w) {
    Monomial m(N);
    for (int letter : w) ++m.exp(letter);
    return m;
}

std::vector<int> monomial_to_word(const Monomial& m) {
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(m.degree()));
    for (int i = 1; i <= m.size(); ++i)
        for (int k = 0; k < m.exp(i); ++k) w.push_back(i);
    return w;
}

// Rewriting constants of a space, built once per multiplication.
struct RewriteCtx {
    const Space& sp;
    QScalar qinv;                 // q^{-1}
    QScalar middle_corr;          // q^{1/2} - q^{-1/2}, odd N only
    std::vector<QScalar> pair_coeff; // (q - q^{-1}) / (q^{rho_a-1} + q^{-rho_a+1}), a < n

    explicit RewriteCtx(const Space& s) : sp(s), qinv(QScalar::qpow(-1)) {
        if (sp.odd) middle_corr = QScalar::tpow(1) - QScalar::tpow(-1);
        pair_coeff.assign(static_cast<std::size_t>(sp.n) + 1, QScalar::zero());
        QScalar qdiff = QScalar::qpow(1) - QScalar::qpow(-1);
        for (int a = 1; a < sp.n; ++a) {
            QScalar den = QScalar::tpow(sp.rho2(a) - 2) + QScalar::tpow(-sp.rho2(a) + 2);
            pair_coeff[static_cast<std::size_t>(a)] = qdiff / den;
        }
    }
};

void normal_order_into(const RewriteCtx& ctx, std::vector<int> word0, QScalar coeff0, Poly& out) {
    struct Item {
        std::vector<int> w;
        QScalar c;
    };
    std::vector<Item> stack;
    stack.push_back({std::move(word0), std::move(coeff0)});
    const Space& sp = ctx.sp;

    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        // first inversion
        std::size_t p = 0;
        bool sorted = true;
        for (; p + 1 < it.w.size(); ++p) {
            if (it.w[p] > it.w[p + 1]) {
                sorted = false;
                break;
            }
        }
        if (sorted) {
            out.add_term(word_to_monomial(sp.N, it.w), it.c);
            continue;
        }
        const int b = it.w[p];
        const int a = it.w[p + 1];
        if (b != sp.prime(a)) {
            // x_b x_a = q^{-1} x_a x_b for a < b, b != a'
            std::swap(it.w[p], it.w[p + 1]);
            stack.push_back({std::move(it.w), it.c * ctx.qinv});
        } else if (a == sp.n && !sp.odd) {
            // the middle pair commutes for N = 2n
            std::swap(it.w[p], it.w[p + 1]);
            stack.push_back({std::move(it.w), std::move(it.c)});
        } else if (a == sp.n && sp.odd) {
            // x_{n'} x_n = x_n x_{n'} + (q^{1/2} - q^{-1/2}) x_{n+1}^2
            std::vector<int> w2 = it.w;
            w2[p] = sp.n + 1;
            w2[p + 1] = sp.n + 1;
            stack.push_back({std::move(w2), it.c * ctx.middle_corr});
            std::swap(it.w[p], it.w[p + 1]);
            stack.push_back({std::move(it.w), std::move(it.c)});
        } else {
            // x_{a'} x_a = x_a x_{a'} + coeff_a * sum_{j=a+1}^{(a+1)'} q^{rho_{j'}} x_j x_{j'}
            const QScalar base = it.c * ctx.pair_coeff[static_cast<std::size_t>(a)];
            for (int j = a + 1; j <= sp.prime(a + 1); ++j) {
                std::vector<int> w2 = it.w;
                w2[p] = j;
                w2[p + 1] = sp.prime(j);
                stack.push_back({std::move(w2), base * sp.q_rho(sp.prime(j))});
            }
            std::swap(it.w[p], it.w[p + 1]);
            stack.push_back({std::move(it.w), std::move(it.c)});
        }
    }
}

} // namespace

Poly normal_order_word(const Space& sp, const std::vector<int>& word, const QScalar& coeff) {
    Poly out(sp.N);
    if (coeff.is_zero()) return out;
    RewriteCtx ctx(sp);
    normal_order_into(ctx, word, coeff, out);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

Poly multiply(const Poly& a, const Poly& b) {
    if (a.N() != b.N()) throw SpaceMismatch("multiply: different spaces");
    Poly out(a.N());
    if (a.is_zero() || b.is_zero()) return out;

    QScalar sc;
    if (b.scalar_value(&sc)) return a * sc;
    if (a.scalar_value(&sc)) return b * sc;

    const Space sp(a.N());
    RewriteCtx ctx(sp);
    for (const auto& [mu, ca] : a.terms()) {
        std::vector<int> left = monomial_to_word(mu);
        for (const auto& [nu, cb] : b.terms()) {
            std::vector<int> w = left;
            std::vector<int> right = monomial_to_word(nu);
            w.insert(w.end(), right.begin(), right.end());
            normal_order_into(ctx, std::move(w), ca * cb, out);
        }
    }
    return out;
}

Poly star(const Poly& p) {
    const Space sp(p.N());
    Poly out(p.N());
    for (const auto& [m, c] : p.terms()) {
        Monomial r(sp.N);
        int two_rho_sum = 0;
        for (int i = 1; i <= sp.N; ++i) {
            r.exp(sp.prime(i)) = m.exp(i);
            two_rho_sum += m.exp(i) * sp.rho2(sp.prime(i));
        }
        out.add_term(r, c * QScalar::tpow(two_rho_sum));
    }
    return out;
}

Poly q_radius(const Space& sp, int j) {
    if (j < 1 || j > sp.n) throw IndexOutOfRange("q_radius: j out of range");
    Poly out(sp.N);
    RewriteCtx ctx(sp);
    for (int i = j; i <= sp.prime(j); ++i) {
        normal_order_into(ctx, {i, sp.prime(i)}, sp.q_rho(sp.prime(i)), out);
    }
    return out;
}

std::map<int, Poly> homogeneous_components(const Poly& p) {
    std::map<int, Poly> out;
    for (const auto& [m, c] : p.terms()) {
        auto [it, inserted] = out.try_emplace(m.degree(), p.N());
        it->second.add_term(m, c);
    }
    return out;
}

std::vector<int> weight_of(const Space& sp, const Monomial& m) {
    std::vector<int> w(static_cast<std::size_t>(sp.n));
    for (int i = 1; i <= sp.n; ++i)
        w[static_cast<std::size_t>(i - 1)] = m.exp(i) - m.exp(sp.prime(i));
    return w;
}

namespace {

void enum_rec(int N, int pos, int remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (pos == N) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    if (pos == N - 1) {
        cur.nu[static_cast<std::size_t>(pos)] = remaining;
        out.push_back(cur);
        cur.nu[static_cast<std::size_t>(pos)] = 0;
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.nu[static_cast<std::size_t>(pos)] = e;
        enum_rec(N, pos + 1, remaining - e, cur, out);
    }
    cur.nu[static_cast<std::size_t>(pos)] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(int N, int m) {
    std::vector<Monomial> out;
    Monomial cur(N);
    enum_rec(N, 0, m, cur, out);
    return out;
}

Poly embed(const Poly& inner, int offset, int N_outer) {
    if (inner.N() + offset > N_outer) throw SpaceMismatch("embed: window does not fit");
    Poly out(N_outer);
    for (const auto& [m, c] : inner.terms()) {
        Monomial r(N_outer);
        for (int i = 1; i <= inner.N(); ++i) r.exp(i + offset) = m.exp(i);
        out.add_term(r, c);
    }
    return out;
}

// ------------------------------------------------------------- printing

namespace {

bool scalar_is_bare(const QScalar& c) {
    // renders without parentheses and without an inner '/'
    if (c.is_zero()) return true;
    int nt = 0;
    for (const auto& v : c.num().coeffs())
        if (v != 0) ++nt;
    return nt == 1 && c.den().is_one();
}

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= m.size(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << i;
        if (m.exp(i) > 1) os << "^" << m.exp(i);
    }
    return os.str();
}

} // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = monomial_str(m);
        std::string cs;
        bool neg = false;
        if (mono.empty()) {
            cs = c.str();
            if (!cs.empty() && cs[0] == '-' && scalar_is_bare(c)) {
                neg = true;
                cs = cs.substr(1);
            }
        } else if (c.is_one()) {
            cs.clear();
        } else if ((-c).is_one()) {
            neg = true;
            cs.clear();
        } else if (scalar_is_bare(c)) {
            cs = c.str();
            if (!cs.empty() && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mono.empty())
            os << cs;
        else if (cs.empty())
            os << mono;
        else
            os << cs << "*" << mono;
    }
    return os.str();
}

} // namespace qharm
