#include "qea/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qea/error.hpp"

namespace qea {

std::vector<Rat> cartan_factor(const AlgebraSpecPtr& spec, const std::vector<Rat>& nu) {
    if (static_cast<int>(nu.size()) != spec->rank) throw Error("cartan_factor: bad weight size");
    std::vector<Rat> c(spec->rank, Rat(0));
    for (int i = 0; i < spec->rank; ++i)
        for (int j = 0; j < spec->rank; ++j) c[i] -= spec->cartan_inv[i][j] * nu[j];
    return c;
}

Scalar cartan_kernel(const AlgebraSpecPtr& spec, const std::vector<Rat>& mu, const std::vector<Rat>& nu) {
    Rat ex(0);
    for (int i = 0; i < spec->rank; ++i)
        for (int j = 0; j < spec->rank; ++j) ex -= spec->d[i] * spec->cartan_inv[i][j] * mu[i] * nu[j];
    return Scalar::q_pow(spec->scalar, ex);
}

std::vector<std::vector<int>> reachable_betas(const Representation& rep, int max_height) {
    const auto& spec = rep.spec;
    std::vector<std::vector<int>> out;
    out.push_back(std::vector<int>(spec->rank, 0));
    for (int x = 0; x < rep.dim; ++x)
        for (int y = 0; y < rep.dim; ++y) {
            if (x == y) continue;
            // delta_j = mu_j(y) - mu_j(x) = sum_i a_{ji} m_i; solve m = a^{-1} delta.
            std::vector<Rat> delta(spec->rank);
            for (int j = 0; j < spec->rank; ++j) delta[j] = rep.t_weights[j][y] - rep.t_weights[j][x];
            std::vector<int> m(spec->rank);
            bool ok = true;
            int h = 0;
            for (int i = 0; i < spec->rank && ok; ++i) {
                Rat mi(0);
                for (int j = 0; j < spec->rank; ++j) mi += spec->cartan_inv[i][j] * delta[j];
                if (mi.get_den() != 1 || mi < 0) {
                    ok = false;
                    break;
                }
                m[i] = static_cast<int>(mi.get_num().get_si());
                h += m[i];
            }
            if (ok && h > 0 && h <= max_height) out.push_back(m);
        }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (height(a) != height(b)) return height(a) < height(b);
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RMatrix build_r(const Representation& rep, const std::vector<DualPairSet>& terms) {
    RMatrix R;
    R.spec = rep.spec;
    R.n = rep.dim;
    R.mat = SpMat(R.n * R.n, rep.spec->scalar);
    std::vector<Scalar> kern(R.n * R.n, Scalar::zero(rep.spec->scalar));
    for (int d = 0; d < R.n; ++d)
        for (int b = 0; b < R.n; ++b)
            kern[R.idx(d, b)] = cartan_kernel(rep.spec, rep.weight(d), rep.weight(b));
    for (const auto& dps : terms) {
        for (const auto& [u, v] : dps.terms) {
            SpMat Mu = evaluate_expr(u, rep), Mv = evaluate_expr(v, rep);
            for (int c = 0; c < R.n; ++c)
                for (const auto& [d, uv] : Mu.row(c))
                    for (int a = 0; a < R.n; ++a)
                        for (const auto& [b, vv] : Mv.row(a))
                            R.mat.add_at(R.idx(c, a), R.idx(d, b), uv * vv * kern[R.idx(d, b)]);
        }
    }
    return R;
}

RMatrix build_r(const Representation& rep, int max_height) {
    auto betas = reachable_betas(rep, max_height);
    // Detect truncation shortfall: the representation may connect weights deeper
    // than the bound allows.
    auto all = reachable_betas(rep, 1 << 16);
    for (const auto& b : all)
        if (height(b) > max_height)
            throw Error("build_r: truncation height " + std::to_string(max_height) +
                        " misses beta of height " + std::to_string(height(b)));
    return build_r(rep, truncated_r_terms(rep.spec, max_height, &betas));
}

CheckReport check_intertwiner(const RMatrix& R, const Representation& rep) {
    CheckReport rpt;
    const auto& spec = rep.spec;
    int n = rep.dim;
    auto idx = [n](int x, int y) { return x * n + y; };
    Representation t2 = tensor_rep(rep, rep);
    for (int j = 0; j < spec->rank; ++j) {
        // Delta^op(e) = 1 (x) e + e (x) t; Delta^op(f) = t^{-1} (x) f + f (x) 1.
        SpMat eop(n * n, spec->scalar), fop(n * n, spec->scalar);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                for (const auto& [c, v] : rep.e_mats[j].row(b)) eop.add_at(idx(a, b), idx(a, c), v);
                for (const auto& [c, v] : rep.f_mats[j].row(b)) {
                    Scalar tv = Scalar::q_pow(spec->scalar, -spec->d[j] * rep.t_weights[j][a]);
                    fop.add_at(idx(a, b), idx(a, c), v * tv);
                }
            }
            for (const auto& [c, v] : rep.e_mats[j].row(a))
                for (int b = 0; b < n; ++b) {
                    Scalar tv = Scalar::q_pow(spec->scalar, spec->d[j] * rep.t_weights[j][b]);
                    eop.add_at(idx(a, b), idx(c, b), v * tv);
                }
            for (const auto& [c, v] : rep.f_mats[j].row(a))
                for (int b = 0; b < n; ++b) fop.add_at(idx(a, b), idx(c, b), v);
        }
        std::vector<Rat> tj(spec->rank, Rat(0));
        tj[j] = 1;
        SpMat tmat = t2.t_diag(tj);
        rpt.add("intertwiner t" + std::to_string(j + 1),
                (R.mat * tmat - tmat * R.mat).is_zero());
        SpMat re = R.mat * t2.e_mats[j] - eop * R.mat;
        rpt.add("intertwiner e" + std::to_string(j + 1), re.is_zero(),
                re.is_zero() ? "" : re.to_string());
        SpMat rf = R.mat * t2.f_mats[j] - fop * R.mat;
        rpt.add("intertwiner f" + std::to_string(j + 1), rf.is_zero(),
                rf.is_zero() ? "" : rf.to_string());
    }
    return rpt;
}

namespace {

// Sparse triple-space operators built from R's nonzero entries.
SpMat lift12(const RMatrix& R) {
    int n = R.n;
    SpMat out(n * n * n, R.spec->scalar);
    for (int row = 0; row < n * n; ++row)
        for (const auto& [col, val] : R.mat.row(row))
            for (int z = 0; z < n; ++z) out.add_at(row * n + z, col * n + z, val);
    return out;
}

SpMat lift23(const RMatrix& R) {
    int n = R.n;
    SpMat out(n * n * n, R.spec->scalar);
    for (int row = 0; row < n * n; ++row)
        for (const auto& [col, val] : R.mat.row(row))
            for (int x = 0; x < n; ++x) out.add_at(x * n * n + row, x * n * n + col, val);
    return out;
}

SpMat lift13(const RMatrix& R) {
    int n = R.n;
    SpMat out(n * n * n, R.spec->scalar);
    for (int row = 0; row < n * n; ++row)
        for (const auto& [col, val] : R.mat.row(row)) {
            int c = row / n, a = row % n, d = col / n, b = col % n;
            for (int y = 0; y < n; ++y)
                out.add_at((c * n + y) * n + a, (d * n + y) * n + b, val);
        }
    return out;
}

// Minimal sparse matrix over Q(sqrt(disc)) for point-evaluated checks.
struct QMat {
    int n = 0;
    std::vector<std::vector<std::pair<int, QuadNum>>> rows;

    explicit QMat(int n_) : n(n_), rows(n_) {}
    void add_at(int r, int c, const QuadNum& v) {
        if (v.is_zero()) return;
        auto& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& p, int col) { return p.first < col; });
        if (it != row.end() && it->first == c) {
            it->second = it->second + v;
            if (it->second.is_zero()) row.erase(it);
        } else {
            row.insert(it, {c, v});
        }
    }
    QMat operator*(const QMat& o) const {
        QMat out(n);
        for (int r = 0; r < n; ++r)
            for (const auto& [k, v] : rows[r])
                for (const auto& [c, w] : o.rows[k]) out.add_at(r, c, v * w);
        return out;
    }
    bool equals(const QMat& o) const {
        for (int r = 0; r < n; ++r) {
            auto lhs = rows[r];
            for (const auto& [c, v] : o.rows[r]) {
                QuadNum neg{-v.p, -v.r, v.disc};
                auto it = std::lower_bound(lhs.begin(), lhs.end(), c,
                                           [](const auto& p, int col) { return p.first < col; });
                if (it != lhs.end() && it->first == c) {
                    it->second = it->second + neg;
                    if (it->second.is_zero()) lhs.erase(it);
                } else {
                    return false;
                }
            }
            for (const auto& [c, v] : lhs)
                if (!v.is_zero()) return false;
        }
        return true;
    }
};

QMat eval_mat(const SpMat& m, const Rat& v0) {
    QMat out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (const auto& [c, v] : m.row(r)) out.add_at(r, c, v.eval_at(v0));
    return out;
}

QMat qidentity(int n, const Rat&) {
    QMat out(n);
    for (int i = 0; i < n; ++i) out.add_at(i, i, QuadNum{Rat(1), Rat(0), Rat(0)});
    return out;
}

}  // namespace

CheckReport check_ybe(const RMatrix& R) {
    CheckReport rpt;
    SpMat r12 = lift12(R), r13 = lift13(R), r23 = lift23(R);
    SpMat lhs = r12 * r13 * r23;
    SpMat rhs = r23 * r13 * r12;
    rpt.add("YBE exact (dim " + std::to_string(R.n * R.n * R.n) + ")", (lhs - rhs).is_zero());
    return rpt;
}

CheckReport check_ybe_at_points(const RMatrix& R, const std::vector<Rat>& points) {
    CheckReport rpt;
    SpMat r12 = lift12(R), r13 = lift13(R), r23 = lift23(R);
    for (const Rat& v0 : points) {
        QMat a = eval_mat(r12, v0), b = eval_mat(r13, v0), c = eval_mat(r23, v0);
        QMat lhs = a * b * c;
        QMat rhs = c * b * a;
        rpt.add("YBE at v = " + v0.get_str(), lhs.equals(rhs));
    }
    return rpt;
}

RMatrix r_inverse_via_antipode(const Representation& rep, const std::vector<DualPairSet>& terms) {
    RMatrix out;
    out.spec = rep.spec;
    out.n = rep.dim;
    out.mat = SpMat(out.n * out.n, rep.spec->scalar);
    // (id (x) S^{-1}) R: slot-1 factors keep their order, the slot-2 element
    // v_i K'(mu_d) becomes S^{-1}(v_i K'(mu_d)) with K' fixed by the slot-1
    // column weight.
    for (const auto& dps : terms) {
        for (const auto& [u, v] : dps.terms) {
            SpMat Mu = evaluate_expr(u, rep);
            std::vector<SpMat> m2(rep.dim, SpMat(rep.dim, rep.spec->scalar));
            std::vector<bool> have(rep.dim, false);
            for (int c = 0; c < out.n; ++c)
                for (const auto& [d, uv] : Mu.row(c)) {
                    if (!have[d]) {
                        NcExpr slot2 = v * nc_t_monomial(rep.spec, cartan_factor(rep.spec, rep.weight(d)));
                        m2[d] = evaluate_expr(antipode(slot2, /*inverse=*/true), rep);
                        have[d] = true;
                    }
                    for (int a = 0; a < out.n; ++a)
                        for (const auto& [b, vv] : m2[d].row(a))
                            out.mat.add_at(out.idx(c, a), out.idx(d, b), uv * vv);
                }
        }
    }
    return out;
}

CheckReport check_r_inverse(const RMatrix& R, const RMatrix& Rinv) {
    CheckReport rpt;
    SpMat id = SpMat::identity(R.n * R.n, R.spec->scalar);
    rpt.add("(id (x) S^{-1})R . R = 1", (Rinv.mat * R.mat - id).is_zero());
    rpt.add("R . (id (x) S^{-1})R = 1", (R.mat * Rinv.mat - id).is_zero());
    return rpt;
}

CheckReport check_r_inverse_at_points(const RMatrix& R, const RMatrix& Rinv,
                                      const std::vector<Rat>& points) {
    CheckReport rpt;
    for (const Rat& v0 : points) {
        QMat a = eval_mat(R.mat, v0), b = eval_mat(Rinv.mat, v0);
        QMat id = qidentity(R.n * R.n, v0);
        rpt.add("inverse at v = " + v0.get_str(), (b * a).equals(id) && (a * b).equals(id));
    }
    return rpt;
}

}  // namespace qea
