#include "qharm/operators.hpp"

namespace qharm {

Poly LinearOperator::apply(const Poly& p) const {
    if (p.N() != N_) throw SpaceMismatch("operator applied to a different space");
    Poly out(N_);
    for (const auto& [m, c] : p.terms()) out += act_(m) * c;
    return out;
}

namespace {

QScalar qnum_sym(int a) { return qnum(a, QConvention::symmetric); }
QScalar qnum_bas(int a) { return qnum(a, QConvention::basic); }

int suffix_sum(const Monomial& m, int from) { // sum_{j >= from} nu_j
    int s = 0;
    for (int j = from; j <= m.size(); ++j) s += m.exp(j);
    return s;
}

} // namespace

LinearOperator partial(const Space& sp, int k) {
    if (k < 1 || k > sp.N) throw IndexOutOfRange("partial: index out of range");
    const Space s = sp;
    if (k <= s.n) {
        return LinearOperator(
            s.N,
            [s, k](const Monomial& m) {
                Poly out(s.N);
                if (m.exp(k) == 0) return out;
                Monomial r = m;
                --r.exp(k);
                out.add_term(r, qnum_sym(m.exp(k)) * QScalar::qpow(suffix_sum(m, k + 1)));
                return out;
            },
            -1);
    }
    if (s.odd && k == s.n + 1) {
        return LinearOperator(
            s.N,
            [s, k](const Monomial& m) {
                Poly out(s.N);
                if (m.exp(k) == 0) return out;
                Monomial r = m;
                --r.exp(k);
                out.add_term(r, qnum_bas(m.exp(k)) * QScalar::qpow(suffix_sum(m, s.n + 2)));
                return out;
            },
            -1);
    }
    // k = kb' with kb <= n
    const int kb = sp.prime(k);
    return LinearOperator(
        s.N,
        [s, k, kb](const Monomial& m) {
            Poly out(s.N);
            // leading term: [nu_{kb'}]_q q^{nu_kb + nu_{(kb-1)'} + ... + nu_{1'}}
            if (m.exp(k) > 0) {
                Monomial r = m;
                --r.exp(k);
                int e = m.exp(kb) + suffix_sum(m, k + 1);
                out.add_term(r, qnum_sym(m.exp(k)) * QScalar::qpow(e));
            }
            const QScalar qdiff = QScalar::qpow(1) - QScalar::qpow(-1);
            for (int j = kb + 1; j <= s.n; ++j) {
                if (m.exp(j) == 0 || m.exp(s.prime(j)) == 0) continue;
                int d = 0;
                for (int i = kb; i < j; ++i) d += m.exp(i);
                d += suffix_sum(m, s.prime(j) + 1); // (j-1)' = j'+1
                Monomial r = m;
                ++r.exp(kb);
                --r.exp(j);
                --r.exp(s.prime(j));
                out.add_term(r, qnum_sym(m.exp(j)) * qnum_sym(m.exp(s.prime(j))) * qdiff *
                                    QScalar::tpow(s.rho2(kb) - s.rho2(j)) * QScalar::qpow(d));
            }
            if (s.odd && m.exp(s.n + 1) >= 2) {
                int mid = m.exp(s.n + 1);
                int e = 0;
                for (int i = kb; i <= s.N; ++i) e += m.exp(i);
                e -= 2 * mid;
                Monomial r = m;
                ++r.exp(kb);
                r.exp(s.n + 1) -= 2;
                QScalar c = qnum_bas(mid - 1) * qnum_bas(mid) * qdiff /
                            (QScalar::one() + QScalar::qpow(1));
                c = c * QScalar::tpow(s.rho2(kb) + 4) * QScalar::qpow(e);
                out.add_term(r, c);
            }
            return out;
        },
        -1);
}

LinearOperator xhat(const Space& sp, int k) {
    if (k < 1 || k > sp.N) throw IndexOutOfRange("xhat: index out of range");
    const Space s = sp;
    return LinearOperator(
        s.N,
        [s, k](const Monomial& m) {
            std::vector<int> w;
            w.reserve(static_cast<std::size_t>(m.degree()) + 1);
            w.push_back(k);
            for (int i = 1; i <= s.N; ++i)
                for (int t = 0; t < m.exp(i); ++t) w.push_back(i);
            return normal_order_word(s, w, QScalar::one());
        },
        +1);
}

LinearOperator qhat(const Space& sp) {
    const Space s = sp;
    const Poly Q = q_radius(s, 1);
    return LinearOperator(
        s.N,
        [s, Q](const Monomial& m) { return multiply(Q, Poly::monomial(s.N, m, QScalar::one())); },
        +2);
}

namespace {

Poly laplacian_direct_mono(const Space& s, const Monomial& m) {
    Poly out(s.N);
    const int tot = m.degree();
    if (tot < 2) return out;
    const QScalar pre = (QScalar::one() + QScalar::qpow(s.N - 2)) * QScalar::qpow(tot - 1);
    for (int j = 1; j <= s.n; ++j) {
        const int jp = s.prime(j);
        if (m.exp(j) == 0 || m.exp(jp) == 0) continue;
        int d = 0;
        for (int i = 1; i < j; ++i) d += m.exp(i);
        for (int i = jp + 1; i <= s.N; ++i) d += m.exp(i);
        Monomial r = m;
        --r.exp(j);
        --r.exp(jp);
        out.add_term(r, pre * qnum_sym(m.exp(j)) * qnum_sym(m.exp(jp)) *
                            QScalar::tpow(-s.rho2(j)) * QScalar::qpow(d));
    }
    if (s.odd && m.exp(s.n + 1) >= 2) {
        const int mid = m.exp(s.n + 1);
        const int e = tot - 2 * mid + 2;
        Monomial r = m;
        r.exp(s.n + 1) -= 2;
        out.add_term(r, pre * qnum_bas(mid - 1) * qnum_bas(mid) * QScalar::qpow(e) /
                            (QScalar::one() + QScalar::qpow(1)));
    }
    return out;
}

} // namespace

LinearOperator laplacian(const Space& sp, LaplacianMode mode) {
    const Space s = sp;
    if (mode == LaplacianMode::direct) {
        return LinearOperator(
            s.N, [s](const Monomial& m) { return laplacian_direct_mono(s, m); }, -2);
    }
    std::vector<LinearOperator> parts;
    parts.reserve(static_cast<std::size_t>(s.N));
    for (int i = 1; i <= s.N; ++i)
        parts.push_back(op_scale(s.q_rho(i), op_compose(partial(s, i), partial(s, s.prime(i)))));
    LinearOperator acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = op_add(acc, parts[i]);
    return LinearOperator(s.N, [acc](const Monomial& m) { return acc.apply(m); }, -2);
}

LinearOperator laplacian_inner(const Space& sp) {
    const Space s = sp;
    if (s.N < 4) throw InvalidDimension("laplacian_inner: needs N >= 4");
    std::vector<LinearOperator> parts;
    for (int j = 2; j <= s.N - 1; ++j)
        parts.push_back(op_scale(s.q_rho(j), op_compose(partial(s, j), partial(s, s.prime(j)))));
    LinearOperator acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = op_add(acc, parts[i]);
    return LinearOperator(s.N, [acc](const Monomial& m) { return acc.apply(m); }, -2);
}

LinearOperator diagonal(const Space& sp, DiagonalOp which) {
    const Space s = sp;
    switch (which) {
        case DiagonalOp::gamma:
            return LinearOperator(
                s.N,
                [s](const Monomial& m) {
                    return Poly::monomial(s.N, m, QScalar::from_int(m.degree()));
                },
                0);
        case DiagonalOp::c:
            return degree_diagonal(s, [](int d) { return QScalar::qpow(d); });
        case DiagonalOp::c_inv:
        default:
            return degree_diagonal(s, [](int d) { return QScalar::qpow(-d); });
    }
}

LinearOperator degree_diagonal(const Space& sp, std::function<QScalar(int)> eigenvalue) {
    const int N = sp.N;
    return LinearOperator(
        N,
        [N, f = std::move(eigenvalue)](const Monomial& m) {
            return Poly::monomial(N, m, f(m.degree()));
        },
        0);
}

LinearOperator chevalley(const Space& sp, Generator g, int k) {
    const Space s = sp;
    const int n = s.n;
    auto shifted = [&s](const Monomial& m, int up, int down) {
        Monomial r = m;
        ++r.exp(up);
        --r.exp(down);
        return r;
    };

    if (g == Generator::Khat) {
        if (k < 1 || k > n) throw IndexOutOfRange("Khat: index out of range");
        return LinearOperator(
            s.N,
            [s, k](const Monomial& m) {
                return Poly::monomial(s.N, m, QScalar::qpow(m.exp(k) - m.exp(s.prime(k))));
            },
            0);
    }
    if (g == Generator::K) {
        if (k < 1 || k >= n) throw IndexOutOfRange("K: printed action exists for i < n only");
        return LinearOperator(
            s.N,
            [s, k](const Monomial& m) {
                int e = (m.exp(k) - m.exp(s.prime(k))) -
                        (m.exp(k + 1) - m.exp(s.prime(k + 1)));
                return Poly::monomial(s.N, m, QScalar::qpow(e));
            },
            0);
    }

    if (k < 1 || k > n) throw IndexOutOfRange("E/F: index out of range");
    if (!s.odd && k == n && n < 2)
        throw IndexOutOfRange("E_n/F_n for N = 2n needs n >= 2");

    if (g == Generator::E) {
        if (k < n) {
            return LinearOperator(
                s.N,
                [s, k, shifted](const Monomial& m) {
                    Poly out(s.N);
                    const int kp = s.prime(k), k1 = k + 1, k1p = s.prime(k + 1);
                    if (m.exp(k1) > 0)
                        out.add_term(shifted(m, k, k1),
                                     qnum_sym(m.exp(k1)) * QScalar::qpow(m.exp(k) - m.exp(k1) + 1));
                    if (m.exp(kp) > 0)
                        out.add_term(shifted(m, k1p, kp),
                                     -qnum_sym(m.exp(kp)) *
                                         QScalar::qpow(m.exp(k) - m.exp(k1) - m.exp(kp) + m.exp(k1p) + 1));
                    return out;
                },
                0);
        }
        if (s.odd) {
            return LinearOperator(
                s.N,
                [s, n, shifted](const Monomial& m) {
                    Poly out(s.N);
                    if (m.exp(n + 1) > 0)
                        out.add_term(shifted(m, n, n + 1),
                                     qnum_bas(m.exp(n + 1)) *
                                         QScalar::qpow_half(2 * (m.exp(n) - m.exp(n + 1)) + 3));
                    if (m.exp(n + 2) > 0)
                        out.add_term(shifted(m, n + 1, n + 2),
                                     -qnum_sym(m.exp(n + 2)) *
                                         QScalar::qpow(m.exp(n) - m.exp(n + 2) + 1));
                    return out;
                },
                0);
        }
        // N = 2n: the printed pair formulas for the n-th generators carry a
        // stray factor 2 on one exponent; the variant below is the one that
        // commutes with Delta_q and Qhat (checked exhaustively), and is the
        // (k,k+1) -> (n-1,n') instance of the generic E_k/F_k pattern.
        return LinearOperator(
            s.N,
            [s, n, shifted](const Monomial& m) {
                Poly out(s.N);
                if (m.exp(n + 1) > 0)
                    out.add_term(shifted(m, n - 1, n + 1),
                                 qnum_sym(m.exp(n + 1)) *
                                     QScalar::qpow(m.exp(n - 1) - m.exp(n + 1) + 1));
                if (m.exp(n + 2) > 0)
                    out.add_term(shifted(m, n, n + 2),
                                 -qnum_sym(m.exp(n + 2)) *
                                     QScalar::qpow(m.exp(n - 1) + m.exp(n) - m.exp(n + 1) -
                                                   m.exp(n + 2) + 1));
                return out;
            },
            0);
    }

    // F
    if (k < n) {
        return LinearOperator(
            s.N,
            [s, k, shifted](const Monomial& m) {
                Poly out(s.N);
                const int kp = s.prime(k), k1 = k + 1, k1p = s.prime(k + 1);
                if (m.exp(k) > 0)
                    out.add_term(shifted(m, k1, k),
                                 qnum_sym(m.exp(k)) *
                                     QScalar::qpow(-m.exp(k) + m.exp(k1) - m.exp(k1p) + m.exp(kp) + 1));
                if (m.exp(k1p) > 0)
                    out.add_term(shifted(m, kp, k1p),
                                 -qnum_sym(m.exp(k1p)) * QScalar::qpow(-m.exp(k1p) + m.exp(kp) + 1));
                return out;
            },
            0);
    }
    if (s.odd) {
        return LinearOperator(
            s.N,
            [s, n, shifted](const Monomial& m) {
                Poly out(s.N);
                if (m.exp(n) > 0)
                    out.add_term(shifted(m, n + 1, n),
                                 qnum_sym(m.exp(n)) *
                                     QScalar::qpow_half(2 * (-m.exp(n) + m.exp(n + 2)) + 1));
                if (m.exp(n + 1) > 0)
                    out.add_term(shifted(m, n + 2, n + 1),
                                 -qnum_bas(m.exp(n + 1)) *
                                     QScalar::qpow(-m.exp(n + 1) + m.exp(n + 2) + 1));
                return out;
            },
            0);
    }
    return LinearOperator(
        s.N,
        [s, n, shifted](const Monomial& m) {
            Poly out(s.N);
            if (m.exp(n - 1) > 0)
                out.add_term(shifted(m, n + 1, n - 1),
                             qnum_sym(m.exp(n - 1)) *
                                 QScalar::qpow(-m.exp(n - 1) - m.exp(n) + m.exp(n + 1) +
                                               m.exp(n + 2) + 1));
            if (m.exp(n) > 0)
                out.add_term(shifted(m, n + 2, n),
                             -qnum_sym(m.exp(n)) * QScalar::qpow(-m.exp(n) + m.exp(n + 2) + 1));
            return out;
        },
        0);
}

std::vector<std::pair<std::string, LinearOperator>> chevalley_all(const Space& sp) {
    std::vector<std::pair<std::string, LinearOperator>> out;
    for (int k = 1; k <= sp.n; ++k) {
        out.emplace_back("E" + std::to_string(k), chevalley(sp, Generator::E, k));
        out.emplace_back("F" + std::to_string(k), chevalley(sp, Generator::F, k));
    }
    for (int k = 1; k < sp.n; ++k)
        out.emplace_back("K" + std::to_string(k), chevalley(sp, Generator::K, k));
    for (int k = 1; k <= sp.n; ++k)
        out.emplace_back("Khat" + std::to_string(k), chevalley(sp, Generator::Khat, k));
    return out;
}

LinearOperator euler(const Space& sp) {
    const Space s = sp;
    std::vector<LinearOperator> parts;
    for (int k = 1; k <= s.N; ++k) parts.push_back(op_compose(xhat(s, k), partial(s, k)));
    LinearOperator acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = op_add(acc, parts[i]);
    return LinearOperator(s.N, [acc](const Monomial& m) { return acc.apply(m); }, 0);
}

LinearOperator op_zero(int N) {
    return LinearOperator(N, [N](const Monomial&) { return Poly(N); }, std::nullopt);
}

LinearOperator op_identity(int N) {
    return LinearOperator(
        N, [N](const Monomial& m) { return Poly::monomial(N, m, QScalar::one()); }, 0);
}

namespace {

std::optional<int> same_shift(const LinearOperator& a, const LinearOperator& b) {
    if (a.degree_shift() && b.degree_shift() && *a.degree_shift() == *b.degree_shift())
        return a.degree_shift();
    return std::nullopt;
}

} // namespace

LinearOperator op_add(const LinearOperator& a, const LinearOperator& b) {
    if (a.N() != b.N()) throw SpaceMismatch("op_add: different spaces");
    return LinearOperator(
        a.N(), [a, b](const Monomial& m) { return a.apply(m) + b.apply(m); }, same_shift(a, b));
}

LinearOperator op_sub(const LinearOperator& a, const LinearOperator& b) {
    if (a.N() != b.N()) throw SpaceMismatch("op_sub: different spaces");
    return LinearOperator(
        a.N(), [a, b](const Monomial& m) { return a.apply(m) - b.apply(m); }, same_shift(a, b));
}

LinearOperator op_scale(const QScalar& c, const LinearOperator& a) {
    return LinearOperator(
        a.N(), [c, a](const Monomial& m) { return a.apply(m) * c; }, a.degree_shift());
}

LinearOperator op_compose(const LinearOperator& a, const LinearOperator& b) {
    if (a.N() != b.N()) throw SpaceMismatch("op_compose: different spaces");
    std::optional<int> shift;
    if (a.degree_shift() && b.degree_shift()) shift = *a.degree_shift() + *b.degree_shift();
    return LinearOperator(
        a.N(), [a, b](const Monomial& m) { return a.apply(b.apply(m)); }, shift);
}

LinearOperator op_commutator(const LinearOperator& a, const LinearOperator& b) {
    return op_sub(op_compose(a, b), op_compose(b, a));
}

LinearOperator op_pow(const LinearOperator& a, int k) {
    if (k < 0) throw IndexOutOfRange("op_pow: negative power");
    LinearOperator acc = op_identity(a.N());
    for (int i = 0; i < k; ++i) acc = op_compose(a, acc);
    return acc;
}

bool operator_is_zero(const LinearOperator& op, int deg_max, std::string* witness) {
    for (int m = 0; m <= deg_max; ++m) {
        for (const Monomial& mono : monomials_of_degree(op.N(), m)) {
            Poly img = op.apply(mono);
            if (!img.is_zero()) {
                if (witness)
                    *witness = "nonzero on " + Poly::monomial(op.N(), mono, QScalar::one()).str() +
                               ": " + img.str();
                return false;
            }
        }
    }
    return true;
}

} // namespace qharm
