#include "qharm/dualpair.hpp"

#include "qharm/harmonic.hpp"

namespace qharm {

OmegaTriple omega(const Space& sp) {
    const int N = sp.N;
    LinearOperator k = degree_diagonal(sp, [N](int d) { return QScalar::tpow(N + 2 * d); });
    LinearOperator k_inv = degree_diagonal(sp, [N](int d) { return QScalar::tpow(-N - 2 * d); });
    LinearOperator e = qhat(sp);
    QScalar scale = -QScalar::tpow(N) /
                    pow(QScalar::one() + QScalar::qpow(N - 2), 2);
    LinearOperator f = op_scale(
        scale, op_compose(laplacian(sp, LaplacianMode::direct), diagonal(sp, DiagonalOp::c_inv)));
    return {std::move(k), std::move(k_inv), std::move(e), std::move(f)};
}

Report verify_sl2(const Space& sp, int deg_max) {
    Report rep;
    rep.suite = "sl2-relations N=" + std::to_string(sp.N);
    const OmegaTriple w = omega(sp);
    const QScalar q2 = QScalar::qpow(2);
    const QScalar qm2 = QScalar::qpow(-2);
    const QScalar qdiff = QScalar::qpow(1) - QScalar::qpow(-1);

    std::string witness;
    LinearOperator r1 = op_sub(op_compose(w.k, w.e), op_scale(q2, op_compose(w.e, w.k)));
    bool ok1 = operator_is_zero(r1, deg_max, &witness);
    rep.add("ke=q^2*ek", ok1, ok1 ? "deg<=" + std::to_string(deg_max) : witness);

    LinearOperator r2 = op_sub(op_compose(w.k, w.f), op_scale(qm2, op_compose(w.f, w.k)));
    bool ok2 = operator_is_zero(r2, deg_max, &witness);
    rep.add("kf=q^-2*fk", ok2, ok2 ? "deg<=" + std::to_string(deg_max) : witness);

    LinearOperator r3 = op_sub(op_commutator(w.e, w.f),
                               op_scale(qdiff.inv(), op_sub(w.k, w.k_inv)));
    bool ok3 = operator_is_zero(r3, deg_max, &witness);
    rep.add("ef-fe=(k-k^-1)/(q-q^-1)", ok3, ok3 ? "deg<=" + std::to_string(deg_max) : witness);
    return rep;
}

Report lowest_weight_check(const Space& sp, int m, int r_max) {
    Report rep;
    rep.suite = "lowest-weight N=" + std::to_string(sp.N) + " m=" + std::to_string(m);
    const OmegaTriple w = omega(sp);
    const Poly Q = q_radius(sp, 1);
    const auto basis = xi_basis(sp.N, m);

    std::vector<bool> ok_e(static_cast<std::size_t>(r_max) + 1, true);
    std::vector<bool> ok_f(static_cast<std::size_t>(r_max) + 1, true);
    std::vector<bool> ok_k(static_cast<std::size_t>(r_max) + 1, true);
    std::vector<std::string> det_e(static_cast<std::size_t>(r_max) + 1),
        det_f(static_cast<std::size_t>(r_max) + 1), det_k(static_cast<std::size_t>(r_max) + 1);

    for (const auto& [lab, h] : basis) {
        // v_r = Q^r h, built incrementally
        std::vector<Poly> v;
        v.push_back(h);
        for (int r = 1; r <= r_max + 1; ++r)
            v.push_back(multiply(Q, v.back()));
        for (int r = 0; r <= r_max; ++r) {
            const std::size_t ur = static_cast<std::size_t>(r);
            if (!(w.e.apply(v[ur]) == v[ur + 1])) {
                ok_e[ur] = false;
                det_e[ur] = "omega(e) mismatch at label " + lab.str();
            }
            Poly fv_expected(sp.N);
            if (r > 0) {
                QScalar coeff = -qnum(r, QConvention::symmetric) *
                                qnum_symmetric_half(2 * (r + m) + sp.N - 2);
                fv_expected = v[ur - 1] * coeff;
            }
            if (!(w.f.apply(v[ur]) == fv_expected)) {
                ok_f[ur] = false;
                det_f[ur] = "omega(f) mismatch at label " + lab.str();
            }
            if (!(w.k.apply(v[ur]) == v[ur] * QScalar::tpow(2 * (2 * r + m) + sp.N))) {
                ok_k[ur] = false;
                det_k[ur] = "omega(k) mismatch at label " + lab.str();
            }
        }
    }
    for (int r = 0; r <= r_max; ++r) {
        const std::size_t ur = static_cast<std::size_t>(r);
        const std::string tag = " r=" + std::to_string(r);
        rep.add("omega(e)(Q^r h)=Q^{r+1}h" + tag, ok_e[ur], det_e[ur]);
        rep.add("omega(f) coefficient" + tag, ok_f[ur], det_f[ur]);
        rep.add("omega(k) eigenvalue" + tag, ok_k[ur], det_k[ur]);
    }
    return rep;
}

} // namespace qharm
