#pragma once

#include "qea/ncalg.hpp"

namespace qea {

/// Bilinear pairing between the up-Borel (e-words with t-monomials) and the
/// down-Borel (f-words with t-monomials).
///
/// Base values: <e_i, f_j> = -delta_ij / omega_i, <t_i^n, t_j^m> = q_i^{-n m a_ij},
/// <e, t> = <t, f> = 0. Products on the right argument are split letter by
/// letter through the coproduct of the left argument, <x, f_j y> =
/// sum <x_(1), f_j> <x_(2), y>, where the first slot must carry exactly one
/// letter e_j and its t-monomial content pairs trivially; the surviving q-powers
/// are the normal-ordering factors of the first slot. Orientation fixed by the
/// rank-1 base case and the slice identities.
Scalar pair_words(const NcExpr& x, const NcExpr& y);

/// All words of the given letter weight, in lexicographic order.
std::vector<Word> words_of_weight(const std::vector<int>& beta, bool f_kind);

/// G_{jk} = <w_j, wbar_k> over the weight-beta word bases.
std::vector<std::vector<Scalar>> gram_matrix(const AlgebraSpecPtr& spec, const std::vector<int>& beta);

/// Weight-graded piece of the truncated universal R: word bases, Gram matrix,
/// and dual terms u^i (x) v_i with v_i single f-words.
struct DualPairSet {
    std::vector<int> beta;
    std::vector<Word> e_words, f_words;
    std::vector<std::vector<Scalar>> gram;
    int rank = 0;
    std::vector<std::pair<NcExpr, NcExpr>> terms;  // (u^i, v_i)
};

DualPairSet dual_pair_basis(const AlgebraSpecPtr& spec, const std::vector<int>& beta);

/// DualPairSets for all beta in Q_+ with height <= max_height (beta = 0 included,
/// with the single term 1 (x) 1). An optional filter restricts the enumeration.
std::vector<DualPairSet> truncated_r_terms(const AlgebraSpecPtr& spec, int max_height,
                                           const std::vector<std::vector<int>>* only = nullptr);

int height(const std::vector<int>& beta);

}  // namespace qea
