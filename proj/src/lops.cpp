#include "qea/lops.hpp"

#include <algorithm>

#include "qea/error.hpp"

namespace qea {

namespace {

std::vector<Rat> zero_texp(const AlgebraSpecPtr& spec) { return std::vector<Rat>(spec->rank, Rat(0)); }

LMatrix empty_lmatrix(const AlgebraSpecPtr& spec, int n, LMatrix::Kind kind, LMatrix::Source src) {
    LMatrix L;
    L.kind = kind;
    L.source = src;
    L.spec = spec;
    L.n = n;
    L.at.assign(n, std::vector<NcExpr>(n, NcExpr(spec)));
    return L;
}

}  // namespace

LMatrix lminus_from_r(const Representation& rep, const std::vector<DualPairSet>& terms) {
    const auto& spec = rep.spec;
    LMatrix L = empty_lmatrix(spec, rep.dim, LMatrix::Kind::minus, LMatrix::Source::slice);
    for (int b = 0; b < rep.dim; ++b) {
        NcExpr tmono = nc_t_monomial(spec, cartan_factor(spec, rep.weight(b)));
        for (const auto& dps : terms)
            for (const auto& [u, v] : dps.terms) {
                SpMat Mv = evaluate_expr(v, rep);
                for (int a = 0; a < rep.dim; ++a) {
                    Scalar c = Mv.at(a, b);
                    if (c.is_zero()) continue;
                    L.at[a][b] = L.at[a][b] + (u * tmono) * c;
                }
            }
    }
    return L;
}

LMatrix lminus_from_r(const Representation& rep, int max_height) {
    auto betas = reachable_betas(rep, max_height);
    auto all = reachable_betas(rep, 1 << 16);
    for (const auto& b : all)
        if (height(b) > max_height)
            throw Error("lminus_from_r: truncation height misses beta of height " +
                        std::to_string(height(b)));
    return lminus_from_r(rep, truncated_r_terms(rep.spec, max_height, &betas));
}

LMatrix lplus_from_r(const Representation& rep, const std::vector<DualPairSet>& terms) {
    const auto& spec = rep.spec;
    LMatrix L = empty_lmatrix(spec, rep.dim, LMatrix::Kind::plus, LMatrix::Source::slice);
    for (int b = 0; b < rep.dim; ++b) {
        NcExpr tmono = nc_t_monomial(spec, cartan_factor(spec, rep.weight(b)));
        for (const auto& dps : terms)
            for (const auto& [u, v] : dps.terms) {
                SpMat Mu = evaluate_expr(u, rep);
                for (int a = 0; a < rep.dim; ++a) {
                    Scalar c = Mu.at(a, b);
                    if (c.is_zero()) continue;
                    L.at[a][b] = L.at[a][b] + (v * tmono) * c;
                }
            }
    }
    for (int a = 0; a < rep.dim; ++a)
        for (int b = 0; b < rep.dim; ++b) L.at[a][b] = antipode(L.at[a][b], /*inverse=*/true);
    return L;
}

LMatrix lplus_from_r(const Representation& rep, int max_height) {
    auto betas = reachable_betas(rep, max_height);
    return lplus_from_r(rep, truncated_r_terms(rep.spec, max_height, &betas));
}

NcExpr e_nonsimple(const AlgebraSpecPtr& spec, int i, int j) {
    if (spec->family != AlgebraSpec::Family::AN)
        throw Error("e_nonsimple: defined for the A series only");
    int dim = spec->rank + 1;
    if (i < 1 || j < 1 || i > dim || j > dim || i == j) throw Error("e_nonsimple: bad indices");
    Scalar q = Scalar::q_pow(spec->scalar, Rat(1));
    if (i < j) {
        if (j == i + 1) return nc_gen(spec, Gen{false, i - 1});
        NcExpr left = e_nonsimple(spec, i, j - 1);
        NcExpr right = nc_gen(spec, Gen{false, j - 2});
        return left * right - (right * left) * q;
    }
    if (i == j + 1) return nc_gen(spec, Gen{true, j - 1});
    NcExpr left = e_nonsimple(spec, i, j + 1);
    NcExpr right = nc_gen(spec, Gen{true, j - 1});
    return left * right - (right * left) * q.inv();
}

NcExpr perm_sum_u(const AlgebraSpecPtr& spec, int a, int b) {
    if (spec->family != AlgebraSpec::Family::AN) throw Error("perm_sum_u: A series only");
    if (a <= b || b < 1 || a > spec->rank + 1) throw Error("perm_sum_u: requires a > b in range");
    int m = a - b;  // word length; values b..a-1 label the letters
    Scalar q = Scalar::q_pow(spec->scalar, Rat(1));
    Scalar omega = spec->omega(0);
    NcExpr sum(spec);
    // Classes are subsets of the neighboring transpositions (c, c-1), c in
    // (b+1..a-1). A subset links consecutive values into ascending runs; runs
    // are emitted in descending order of their top value.
    for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
        Word w;
        int v = a - 1;
        while (v >= b) {
            int lo = v;
            while (lo > b && (mask & (1u << (lo - b - 1)))) --lo;
            for (int c = lo; c <= v; ++c) w.push_back(Gen{false, c - 1});
            v = lo - 1;
        }
        int nP = __builtin_popcount(mask);
        Scalar coeff = Scalar::q_pow(spec->scalar, Rat(-nP));
        if (nP % 2) coeff = -coeff;
        sum = sum + nc_word(spec, w) * coeff;
    }
    return sum * (-(omega * Scalar::q_pow(spec->scalar, Rat(a - b - 1))));
}

namespace {

// Catalog signs for the A-series closed forms: lower entries carry -omega,
// upper entries +omega, uniformly in a-b. See the A1 case and the transform rule.
NcExpr catalog_an_impl(const AlgebraSpecPtr& spec, LMatrix::Kind kind, int a, int b) {
    int N = spec->rank;
    int dim = N + 1;
    if (a < 1 || b < 1 || a > dim || b > dim) throw Error("catalog_an: bad indices");
    bool minus = kind == LMatrix::Kind::minus;
    if ((minus && a < b) || (!minus && a > b)) return NcExpr(spec);
    // Diagonal monomial: prod_j t_j^{j/(N+1)} prod_{k>=b} t_k^{-1}, inverted for L^+.
    std::vector<Rat> texp(N);
    int anchor = minus ? b : a;
    for (int j = 1; j <= N; ++j) texp[j - 1] = Rat(j, N + 1) - Rat(j >= anchor ? 1 : 0);
    if (!minus)
        for (auto& r : texp) r = -r;
    NcExpr tmono = nc_t_monomial(spec, texp);
    if (a == b) return tmono;
    Scalar omega = spec->omega(0);
    if (minus) return (e_nonsimple(spec, b, a) * tmono) * (-omega);
    return (tmono * e_nonsimple(spec, b, a)) * omega;
}

Word g2_word(const std::string& letters) {
    Word w;
    for (char ch : letters) w.push_back(Gen{false, ch - '1'});
    return w;
}

}  // namespace

NcExpr catalog_an(const AlgebraSpecPtr& spec, LMatrix::Kind kind, int a, int b) {
    if (spec->family != AlgebraSpec::Family::AN) throw Error("catalog_an: A series only");
    return catalog_an_impl(spec, kind, a, b);
}

NcExpr catalog_g2(const AlgebraSpecPtr& spec, LMatrix::Kind kind, int a, int b) {
    if (spec->family != AlgebraSpec::Family::G2) throw Error("catalog_g2: G2 only");
    if (a < 1 || b < 1 || a > 7 || b > 7) throw Error("catalog_g2: bad indices");
    if (kind == LMatrix::Kind::plus) return minus_to_plus_transform(catalog_g2(spec, LMatrix::Kind::minus, b, a));
    if (a < b) return NcExpr(spec);

    const auto& sp = spec->scalar;
    auto q2 = [&](int k) { return Scalar::v_pow(sp, k); };
    Scalar q = q2(3);
    Scalar w1 = spec->omega(0), w2 = spec->omega(1);
    auto br = [&](long m) { return qnum(sp, m, Rat(1, 3)); };
    Scalar s = Scalar::sqrt_sym(sp);
    Scalar one = Scalar::one(sp);

    static const int diag_texp[7][2] = {{-1, -2}, {-1, -1}, {0, -1}, {0, 0}, {0, 1}, {1, 1}, {1, 2}};
    std::vector<Rat> texp = {Rat(diag_texp[b - 1][0]), Rat(diag_texp[b - 1][1])};
    NcExpr tmono = nc_t_monomial(spec, texp);
    if (a == b) return tmono;

    Scalar pref = Scalar::zero(sp);
    std::vector<std::pair<Scalar, Word>> bracket;
    int gap_key = 10 * a + b;
    switch (gap_key) {
        case 21: pref = -w2; bracket = {{one, g2_word("2")}}; break;
        case 32: pref = -w1; bracket = {{one, g2_word("1")}}; break;
        case 43: pref = -(w2 * s); bracket = {{one, g2_word("2")}}; break;
        case 54: pref = -(w2 * s); bracket = {{one, g2_word("2")}}; break;
        case 65: pref = -w1; bracket = {{one, g2_word("1")}}; break;
        case 76: pref = -w2; bracket = {{one, g2_word("2")}}; break;

        case 31: pref = w2; bracket = {{q, g2_word("12")}, {-one, g2_word("21")}}; break;
        case 42: pref = -(w2 * s); bracket = {{one, g2_word("12")}, {-q, g2_word("21")}}; break;
        case 53: pref = w2 * w2 * q2(-1); bracket = {{one, g2_word("22")}}; break;
        case 64: pref = w2 * s; bracket = {{q, g2_word("12")}, {-one, g2_word("21")}}; break;
        case 75: pref = -w2; bracket = {{one, g2_word("12")}, {-q, g2_word("21")}}; break;

        case 41:
        case 74:
            pref = w2 * q2(2) * s.inv();
            bracket = {{one, g2_word("122")}, {-(br(6) / br(3)), g2_word("212")}, {one, g2_word("221")}};
            break;
        case 52:
            pref = -(w2 * br(2).inv());
            bracket = {{one, g2_word("122")}, {-(q2(2) * br(2)), g2_word("212")}, {q2(4), g2_word("221")}};
            break;
        case 63:
            pref = -(w2 * br(2).inv());
            bracket = {{q2(4), g2_word("122")}, {-(q2(2) * br(2)), g2_word("212")}, {one, g2_word("221")}};
            break;

        case 51:
            pref = w2 * q2(1) * br(2).inv();
            bracket = {{one, g2_word("1222")},
                       {-(br(4) - q2(-1)), g2_word("2122")},
                       {q2(1) * (br(4) - q2(1)), g2_word("2212")},
                       {-q2(1), g2_word("2221")}};
            break;
        case 62:
            pref = -(w1 * w2 * q2(2) * br(6).inv());
            bracket = {{one, g2_word("1122")},
                       {br(3), g2_word("2112")},
                       {-(br(6) * br(5) / (br(3) * br(2))), g2_word("1221")},
                       {one, g2_word("2211")}};
            break;
        case 73:
            pref = -(w2 * q2(1) * br(2).inv());
            bracket = {{q2(1), g2_word("1222")},
                       {-(q2(1) * (br(4) - q2(1))), g2_word("2122")},
                       {br(4) - q2(-1), g2_word("2212")},
                       {-one, g2_word("2221")}};
            break;

        case 61:
            pref = w1 * q * (br(6) * br(2)).inv();
            bracket = {{q2(2), g2_word("11222")},
                       {q2(-2), g2_word("22211")},
                       {q2(1) * (br(4) - q2(-1)), g2_word("21122")},
                       {q2(-1) * (br(4) - q2(1)), g2_word("22112")},
                       {-(q2(2) * (br(4) - q2(1)) * (br(6) / br(3))), g2_word("12212")},
                       {-(q2(-2) * (br(4) - q2(-1)) * (br(6) / br(3))), g2_word("21221")},
                       {br(6) * br(4) / (br(3) * br(2)), g2_word("12221")}};
            break;
        case 72:
            pref = w1 * q * (br(6) * br(2)).inv();
            bracket = {{q2(-2), g2_word("11222")},
                       {q2(2), g2_word("22211")},
                       {q2(-1) * (br(4) - q2(1)), g2_word("21122")},
                       {q2(1) * (br(4) - q2(-1)), g2_word("22112")},
                       {-(q2(-2) * (br(4) - q2(-1)) * (br(6) / br(3))), g2_word("12212")},
                       {-(q2(2) * (br(4) - q2(1)) * (br(6) / br(3))), g2_word("21221")},
                       {br(6) * br(4) / (br(3) * br(2)), g2_word("12221")}};
            break;
        case 71:
            pref = w1 * w2 * q * (br(6) * br(2)).inv();
            bracket = {{br(6) * br(4) * br(4) / (br(3) * br(2)), g2_word("212212")},
                       {-(br(6) / (br(3) * br(2))), g2_word("122221")},
                       {-(br(4) * br(2) - one), g2_word("221122")},
                       {one, g2_word("222211")},
                       {one, g2_word("112222")},
                       {-(br(6) * br(5) / (br(3) * br(2))), g2_word("122122")},
                       {-(br(6) * br(5) / (br(3) * br(2))), g2_word("221221")}};
            break;
        default:
            throw Error("catalog_g2: missing entry");
    }
    NcExpr sum(spec);
    for (const auto& [c, w] : bracket) sum = sum + nc_word(spec, w) * (pref * c);
    return sum * tmono;
}

NcExpr minus_to_plus_transform(const NcExpr& x) {
    const auto& spec = x.spec();
    NcExpr out(spec);
    for (const auto& term : x.terms()) {
        std::vector<Rat> neg = term.mono.texp;
        for (auto& r : neg) r = -r;
        Word w;
        for (auto it = term.mono.word.rbegin(); it != term.mono.word.rend(); ++it)
            w.push_back(Gen{!it->f, it->idx});
        out = out + (nc_t_monomial(spec, neg) * nc_word(spec, w)) * term.coeff.bar();
    }
    return out;
}

LMatrix catalog_lmatrix(const AlgebraSpecPtr& spec, LMatrix::Kind kind) {
    int n = spec->family == AlgebraSpec::Family::G2 ? 7 : spec->rank + 1;
    LMatrix L = empty_lmatrix(spec, n, kind, LMatrix::Source::catalog);
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            L.at[a - 1][b - 1] = spec->family == AlgebraSpec::Family::G2
                                     ? catalog_g2(spec, kind, a, b)
                                     : catalog_an(spec, kind, a, b);
    return L;
}

CheckReport verify_slices(const LMatrix& L, const RMatrix& R, const Representation& rep) {
    CheckReport rpt;
    bool minus = L.kind == LMatrix::Kind::minus;
    for (int a = 0; a < L.n; ++a)
        for (int b = 0; b < L.n; ++b) {
            NcExpr entry = minus ? L.at[a][b] : antipode(L.at[a][b]);
            SpMat M = evaluate_expr(entry, rep);
            bool ok = true;
            std::string what;
            for (int c = 0; c < L.n && ok; ++c)
                for (int d = 0; d < L.n && ok; ++d) {
                    Scalar want = minus ? R.entry(c, a, d, b) : R.entry(a, c, b, d);
                    if (!(M.at(c, d) == want)) {
                        ok = false;
                        what = "mismatch at (c,d) = (" + std::to_string(c + 1) + "," +
                               std::to_string(d + 1) + ")";
                    }
                }
            rpt.add((minus ? std::string("L-(") : std::string("L+(")) + std::to_string(a + 1) + "," +
                        std::to_string(b + 1) + ") slice",
                    ok, what);
        }
    return rpt;
}

CheckReport verify_plus_against_inverse(const LMatrix& L, const RMatrix& Rinv, const Representation& rep) {
    CheckReport rpt;
    if (L.kind != LMatrix::Kind::plus) throw Error("verify_plus_against_inverse: plus kind required");
    for (int a = 0; a < L.n; ++a)
        for (int b = 0; b < L.n; ++b) {
            SpMat M = evaluate_expr(L.at[a][b], rep);
            bool ok = true;
            for (int c = 0; c < L.n && ok; ++c)
                for (int d = 0; d < L.n && ok; ++d)
                    if (!(M.at(c, d) == Rinv.entry(a, c, b, d))) ok = false;
            rpt.add("L+(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") vs R^{-1}", ok);
        }
    return rpt;
}

CheckReport lmatrix_match(const LMatrix& x, const LMatrix& y, const Representation& rep) {
    CheckReport rpt;
    if (x.n != y.n) throw Error("lmatrix_match: size mismatch");
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < x.n; ++b) {
            SpMat diff = evaluate_expr(x.at[a][b] - y.at[a][b], rep);
            rpt.add("entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") in " + rep.label,
                    diff.is_zero(), diff.is_zero() ? "" : diff.to_string());
        }
    return rpt;
}

}  // namespace qea
