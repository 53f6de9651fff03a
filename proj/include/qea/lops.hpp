#pragma once

#include "qea/rmatrix.hpp"

namespace qea {

/// Operator-valued L matrix; entries are algebra elements.
struct LMatrix {
    enum class Kind { minus, plus };
    enum class Source { slice, catalog };
    Kind kind = Kind::minus;
    Source source = Source::slice;
    AlgebraSpecPtr spec;
    int n = 0;
    std::vector<std::vector<NcExpr>> at;  // [a][b], 0-based

    const NcExpr& entry(int a, int b) const { return at[a - 1][b - 1]; }  // 1-based access
};

/// (L^-)^a_b = sum_beta sum_i u^i D(v_i)_{ab} prod_j t_j^{c_j(nu_b)}: the second
/// slot of R is evaluated, the first keeps operator form.
LMatrix lminus_from_r(const Representation& rep, const std::vector<DualPairSet>& terms);
LMatrix lminus_from_r(const Representation& rep, int max_height = 6);

/// First slot evaluated instead: M^a_b = sum D(u^i)_{ab} v_i K'(mu_b), then
/// (L^+)^a_b = S^{-1}(M^a_b) entrywise.
LMatrix lplus_from_r(const Representation& rep, const std::vector<DualPairSet>& terms);
LMatrix lplus_from_r(const Representation& rep, int max_height = 6);

/// Non-simple root generator by the q-commutator recursion,
/// E_{i(i+1)} = e_i, E_{ij} = E_{ik}E_{kj} - q E_{kj}E_{ik} (raising, i < k < j)
/// and E_{(j+1)j} = f_j, E_{ji} = E_{jk}E_{ki} - q^{-1}E_{ki}E_{jk} (lowering).
/// 1-based indices; defined for the A series only.
NcExpr e_nonsimple(const AlgebraSpecPtr& spec, int i, int j);

/// Signed sum over inequivalent permutation classes,
/// -omega q^{a-b-1} sum_P (-q)^{-n(P)} e_{p_1}...e_{p_{a-b}}; classes are the
/// subsets of neighboring transpositions, realized as ascending runs in
/// descending block order. Must agree with (-1)^{a-b} omega E_{ba} under
/// evaluation.
NcExpr perm_sum_u(const AlgebraSpecPtr& spec, int a, int b);

/// Closed-form catalog entries; 1-based indices.
NcExpr catalog_an(const AlgebraSpecPtr& spec, LMatrix::Kind kind, int a, int b);
NcExpr catalog_g2(const AlgebraSpecPtr& spec, LMatrix::Kind kind, int a, int b);
LMatrix catalog_lmatrix(const AlgebraSpecPtr& spec, LMatrix::Kind kind);

/// q_j -> q_j^{-1} on coefficients (v -> v^{-1}, s fixed), e <-> f, t -> t^{-1},
/// product order reversed. An involution.
NcExpr minus_to_plus_transform(const NcExpr& x);

/// Slice identities: for minus, D((L^-)^a_b)_{cd} = R^{ca}_{db}; for plus,
/// D(S((L^+)^a_b))_{cd} = R^{ac}_{bd}.
CheckReport verify_slices(const LMatrix& L, const RMatrix& R, const Representation& rep);

/// The equivalent inverse-side identity D((L^+)^a_b)_{cd} = (R^{-1})^{ac}_{bd}.
CheckReport verify_plus_against_inverse(const LMatrix& L, const RMatrix& Rinv, const Representation& rep);

/// Entrywise equality of two L matrices under evaluation in a representation.
CheckReport lmatrix_match(const LMatrix& x, const LMatrix& y, const Representation& rep);

}  // namespace qea
