#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qharm/algebra.hpp"

namespace qharm {

/// A linear map Poly -> Poly given by its action on basis monomials and
/// extended linearly. Immutable value; applying it is pure.
class LinearOperator {
public:
    using Action = std::function<Poly(const Monomial&)>;

    LinearOperator(int N, Action act, std::optional<int> degree_shift = std::nullopt)
        : N_(N), act_(std::move(act)), shift_(degree_shift) {}

    int N() const { return N_; }
    std::optional<int> degree_shift() const { return shift_; }

    Poly apply(const Monomial& m) const { return act_(m); }
    Poly apply(const Poly& p) const;

private:
    int N_;
    Action act_;
    std::optional<int> shift_;
};

/// The q-derivative in direction k, Lemma-2.5-style monomial action.
LinearOperator partial(const Space& sp, int k);

/// Left multiplication by x_k / by Q.
LinearOperator xhat(const Space& sp, int k);
LinearOperator qhat(const Space& sp);

enum class LaplacianMode { composed, direct };

/// The q-Laplace operator, either composed from the q-derivatives or via
/// the closed monomial formula. The two must agree; the verification suite
/// uses that agreement to pin the bracket conventions.
LinearOperator laplacian(const Space& sp, LaplacianMode mode = LaplacianMode::direct);

enum class DiagonalOp { gamma, c, c_inv };
LinearOperator diagonal(const Space& sp, DiagonalOp which);

/// Diagonal operator whose eigenvalue on A_m is eigenvalue(m).
LinearOperator degree_diagonal(const Space& sp, std::function<QScalar(int)> eigenvalue);

enum class Generator { E, F, K, Khat };

/// Chevalley action of U_q(so_N) on monomials. E/F take 1 <= k <= n
/// (for even N the n-th pair needs n >= 2), K takes 1 <= k < n,
/// Khat takes 1 <= k <= n.
LinearOperator chevalley(const Space& sp, Generator g, int k);

/// Every generator exposed by chevalley for this space, with stable names.
std::vector<std::pair<std::string, LinearOperator>> chevalley_all(const Space& sp);

/// E = sum_k xhat_k partial_k.
LinearOperator euler(const Space& sp);

/// sum_{j=2}^{N-1} q^{rho_j} partial_j partial_{j'} — the q-Laplacian of
/// the inner window x_2..x_{2'} acting on the full algebra.
LinearOperator laplacian_inner(const Space& sp);

LinearOperator op_zero(int N);
LinearOperator op_identity(int N);
LinearOperator op_add(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_sub(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_scale(const QScalar& c, const LinearOperator& a);
/// Composition a after b.
LinearOperator op_compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_commutator(const LinearOperator& a, const LinearOperator& b);
LinearOperator op_pow(const LinearOperator& a, int k);

/// Exhaustively applies the operator to every monomial of degree <= deg_max
/// and reports whether all images vanish; the first nonzero witness (if
/// any) is described in *witness.
bool operator_is_zero(const LinearOperator& op, int deg_max, std::string* witness = nullptr);

} // namespace qharm
