#include "qea/pairing.hpp"

#include <algorithm>
#include <functional>

#include "qea/error.hpp"

namespace qea {

namespace {

// <word with letters removed> tracked by index list to avoid copies.
Scalar pair_pure_words(const AlgebraSpecPtr& spec, const Word& ew, std::vector<int>& alive,
                       const Word& fw, size_t fpos) {
    if (fpos == fw.size()) {
        bool empty = std::all_of(alive.begin(), alive.end(), [](int a) { return a == 0; });
        return empty ? Scalar::one(spec->scalar) : Scalar::zero(spec->scalar);
    }
    int j = fw[fpos].idx;
    Scalar total = Scalar::zero(spec->scalar);
    Scalar base = -spec->omega(j).inv();
    for (size_t k = 0; k < ew.size(); ++k) {
        if (!alive[k] || ew[k].idx != j) continue;
        // Normal-ordering factor: the extracted e_j hops over the t-letters
        // produced by the still-alive positions to its left.
        Rat ex(0);
        for (size_t l = 0; l < k; ++l)
            if (alive[l]) ex += spec->d[ew[l].idx] * spec->cartan[ew[l].idx][j];
        alive[k] = 0;
        Scalar rest = pair_pure_words(spec, ew, alive, fw, fpos + 1);
        alive[k] = 1;
        if (!rest.is_zero()) total += Scalar::q_pow(spec->scalar, ex) * base * rest;
    }
    return total;
}

Scalar tt_pair(const AlgebraSpecPtr& spec, const std::vector<Rat>& mu, const std::vector<Rat>& nu) {
    Rat ex(0);
    for (int i = 0; i < spec->rank; ++i)
        for (int j = 0; j < spec->rank; ++j) ex -= spec->d[i] * spec->cartan[i][j] * mu[i] * nu[j];
    return Scalar::q_pow(spec->scalar, ex);
}

}  // namespace

Scalar pair_words(const NcExpr& x, const NcExpr& y) {
    const auto& spec = x.spec() ? x.spec() : y.spec();
    if (!spec) throw Error("pair_words: unattached expressions");
    Scalar total = Scalar::zero(spec->scalar);
    for (const auto& tx : x.terms()) {
        for (const Gen& g : tx.mono.word)
            if (g.f) throw Error("pair_words: left argument must be a pure-e expression");
        for (const auto& ty : y.terms()) {
            for (const Gen& g : ty.mono.word)
                if (!g.f) throw Error("pair_words: right argument must be a pure-f expression");
            if (tx.mono.word.size() != ty.mono.word.size()) continue;
            std::vector<int> we = weight_of(tx.mono.word), wf = weight_of(ty.mono.word);
            we.resize(spec->rank, 0);
            wf.resize(spec->rank, 0);
            if (we != wf) continue;
            std::vector<int> alive(tx.mono.word.size(), 1);
            Scalar pw = pair_pure_words(spec, tx.mono.word, alive, ty.mono.word, 0);
            if (pw.is_zero()) continue;
            total += tx.coeff * ty.coeff * pw * tt_pair(spec, tx.mono.texp, ty.mono.texp);
        }
    }
    return total;
}

int height(const std::vector<int>& beta) {
    int h = 0;
    for (int m : beta) h += m;
    return h;
}

std::vector<Word> words_of_weight(const std::vector<int>& beta, bool f_kind) {
    std::vector<int> letters;
    for (size_t i = 0; i < beta.size(); ++i)
        letters.insert(letters.end(), beta[i], static_cast<int>(i));
    std::vector<Word> out;
    if (letters.empty()) {
        out.push_back({});
        return out;
    }
    std::sort(letters.begin(), letters.end());
    do {
        Word w;
        for (int idx : letters) w.push_back(Gen{f_kind, idx});
        out.push_back(w);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<std::vector<Scalar>> gram_matrix(const AlgebraSpecPtr& spec, const std::vector<int>& beta) {
    for (int m : beta)
        if (m < 0) throw Error("gram_matrix: beta must lie in Q_+");
    auto ew = words_of_weight(beta, false);
    auto fw = words_of_weight(beta, true);
    std::vector<std::vector<Scalar>> g(ew.size(), std::vector<Scalar>(fw.size(), Scalar::zero(spec->scalar)));
    for (size_t j = 0; j < ew.size(); ++j)
        for (size_t k = 0; k < fw.size(); ++k)
            g[j][k] = pair_words(nc_word(spec, ew[j]), nc_word(spec, fw[k]));
    return g;
}

DualPairSet dual_pair_basis(const AlgebraSpecPtr& spec, const std::vector<int>& beta) {
    DualPairSet dps;
    dps.beta = beta;
    dps.beta.resize(spec->rank, 0);
    dps.e_words = words_of_weight(dps.beta, false);
    dps.f_words = words_of_weight(dps.beta, true);
    dps.gram = gram_matrix(spec, dps.beta);

    size_t n = dps.e_words.size();
    // Rank-revealing elimination with least-degree pivoting; the selected
    // rows/columns index an invertible submatrix of maximal rank.
    std::vector<std::vector<Scalar>> m = dps.gram;
    std::vector<int> rows_left(n), cols_left(n);
    for (size_t i = 0; i < n; ++i) rows_left[i] = cols_left[i] = 1;
    std::vector<int> sel_rows, sel_cols;
    while (true) {
        int pr = -1, pc = -1, best = -1;
        for (size_t r = 0; r < n; ++r) {
            if (!rows_left[r]) continue;
            for (size_t c = 0; c < n; ++c) {
                if (!cols_left[c] || m[r][c].is_zero()) continue;
                int sz = m[r][c].degree_size();
                if (best < 0 || sz < best) {
                    best = sz;
                    pr = static_cast<int>(r);
                    pc = static_cast<int>(c);
                }
            }
        }
        if (pr < 0) break;
        sel_rows.push_back(pr);
        sel_cols.push_back(pc);
        rows_left[pr] = cols_left[pc] = 0;
        Scalar piv_inv = m[pr][pc].inv();
        for (size_t r = 0; r < n; ++r) {
            if (!rows_left[r] || m[r][pc].is_zero()) continue;
            Scalar fac = m[r][pc] * piv_inv;
            for (size_t c = 0; c < n; ++c)
                if (cols_left[c]) m[r][c] = m[r][c] - fac * m[pr][c];
        }
    }
    dps.rank = static_cast<int>(sel_rows.size());
    if (dps.rank == 0) return dps;
    std::sort(sel_rows.begin(), sel_rows.end());
    std::sort(sel_cols.begin(), sel_cols.end());

    // Invert the selected submatrix by Gauss-Jordan over the field.
    int k = dps.rank;
    std::vector<std::vector<Scalar>> aug(k, std::vector<Scalar>(2 * k, Scalar::zero(spec->scalar)));
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) aug[r][c] = dps.gram[sel_rows[r]][sel_cols[c]];
        aug[r][k + r] = Scalar::one(spec->scalar);
    }
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (!aug[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw Error("dual_pair_basis: selected submatrix is singular");
        std::swap(aug[col], aug[pivot]);
        Scalar inv = aug[col][col].inv();
        for (int c = 0; c < 2 * k; ++c) aug[col][c] = aug[col][c] * inv;
        for (int r = 0; r < k; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            Scalar fac = aug[r][col];
            for (int c = 0; c < 2 * k; ++c) aug[r][c] = aug[r][c] - fac * aug[col][c];
        }
    }
    // Row i of the inverse gives u^i dual to the f-word at sel_cols[i]:
    // <u^i, wbar_{sel_cols[i']}> = sum_j inv_{ij} gram[J_j, K_{i'}] = delta_{ii'}.
    for (int i = 0; i < k; ++i) {
        std::vector<NcTerm> terms;
        for (int j = 0; j < k; ++j) {
            NcTerm t;
            t.coeff = aug[i][k + j];
            t.mono.word = dps.e_words[sel_rows[j]];
            t.mono.texp.assign(spec->rank, Rat(0));
            terms.push_back(t);
        }
        dps.terms.emplace_back(NcExpr(spec, terms), nc_word(spec, dps.f_words[sel_cols[i]]));
    }
    return dps;
}

std::vector<DualPairSet> truncated_r_terms(const AlgebraSpecPtr& spec, int max_height,
                                           const std::vector<std::vector<int>>* only) {
    if (max_height < 0) throw Error("truncated_r_terms: height bound must be >= 0");
    std::vector<std::vector<int>> betas;
    if (only) {
        betas = *only;
    } else {
        std::vector<int> cur(spec->rank, 0);
        // Enumerate all beta with height <= bound in lexicographic order.
        std::function<void(int, int)> go = [&](int pos, int left) {
            if (pos == spec->rank) {
                betas.push_back(cur);
                return;
            }
            for (int m = 0; m <= left; ++m) {
                cur[pos] = m;
                go(pos + 1, left - m);
            }
            cur[pos] = 0;
        };
        go(0, max_height);
    }
    std::sort(betas.begin(), betas.end(), [](const auto& a, const auto& b) {
        if (height(a) != height(b)) return height(a) < height(b);
        return a < b;
    });
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
    std::vector<DualPairSet> out;
    for (const auto& b : betas) {
        if (height(b) > max_height) continue;
        if (height(b) == 0) {
            DualPairSet dps;
            dps.beta = b;
            dps.e_words = {{}};
            dps.f_words = {{}};
            dps.gram = {{Scalar::one(spec->scalar)}};
            dps.rank = 1;
            dps.terms.emplace_back(nc_one(spec), nc_one(spec));
            out.push_back(dps);
        } else {
            out.push_back(dual_pair_basis(spec, b));
        }
    }
    return out;
}

}  // namespace qea
