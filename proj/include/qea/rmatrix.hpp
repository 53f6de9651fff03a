#pragma once

#include "qea/pairing.hpp"
#include "qea/reps.hpp"

namespace qea {

/// n^2 x n^2 matrix R^{ca}_{db} on (rep (x) rep); composite row index (c,a)
/// and column index (d,b), row-major over (first slot, second slot), 0-based
/// internally.
struct RMatrix {
    AlgebraSpecPtr spec;
    int n = 0;
    SpMat mat;  // dim n^2

    int idx(int x, int y) const { return x * n + y; }
    Scalar entry(int c, int a, int d, int b) const { return mat.at(idx(c, a), idx(d, b)); }
};

/// c_i = -sum_j (a^{-1})_{ij} nu_j; prod_j t_j^{c_j} acting on a weight-mu state
/// multiplies by q^{-sum d_i (a^{-1})_{ij} mu_i nu_j}, the inverse-Cartan kernel.
std::vector<Rat> cartan_factor(const AlgebraSpecPtr& spec, const std::vector<Rat>& nu);

/// Scalar value q^{-sum_{ij} d_i (a^{-1})_{ij} mu_i nu_j}.
Scalar cartan_kernel(const AlgebraSpecPtr& spec, const std::vector<Rat>& mu, const std::vector<Rat>& nu);

/// Weights in Q_+ reachable as differences of representation weights; these are
/// the only graded pieces that can contribute on rep (x) rep.
std::vector<std::vector<int>> reachable_betas(const Representation& rep, int max_height);

/// R = (sum_beta sum_i u^i (x) v_i) q^{-H} evaluated on rep (x) rep; the Cartan
/// kernel acts first, so its factor sits on the column weights.
RMatrix build_r(const Representation& rep, const std::vector<DualPairSet>& terms);
RMatrix build_r(const Representation& rep, int max_height = 6);

/// R (D(x)D)(Delta(g)) = (D(x)D)(Delta^op(g)) R for every generator g.
CheckReport check_intertwiner(const RMatrix& R, const Representation& rep);

/// R12 R13 R23 = R23 R13 R12 on the triple tensor space, exact.
CheckReport check_ybe(const RMatrix& R);
/// Same check after exact evaluation at rational points v = v0 (quadratic
/// number field arithmetic when a square root is adjoined).
CheckReport check_ybe_at_points(const RMatrix& R, const std::vector<Rat>& points);

/// Assembles (id (x) S^{-1})R and verifies it is a two-sided inverse of R.
RMatrix r_inverse_via_antipode(const Representation& rep, const std::vector<DualPairSet>& terms);
CheckReport check_r_inverse(const RMatrix& R, const RMatrix& Rinv);
CheckReport check_r_inverse_at_points(const RMatrix& R, const RMatrix& Rinv, const std::vector<Rat>& points);

}  // namespace qea
