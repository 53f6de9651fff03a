#include "qea/reps.hpp"

#include <algorithm>
#include <sstream>

#include "qea/error.hpp"

namespace qea {

SpMat SpMat::identity(int n, const ScalarSpecPtr& spec) {
    SpMat m(n, spec);
    for (int i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Scalar::one(spec));
    return m;
}

bool SpMat::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

int SpMat::nnz() const {
    int c = 0;
    for (const auto& r : rows_) c += static_cast<int>(r.size());
    return c;
}

Scalar SpMat::at(int r, int c) const {
    for (const auto& [col, v] : rows_[r])
        if (col == c) return v;
    return Scalar::zero(spec_);
}

void SpMat::set(int r, int c, const Scalar& v) {
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {c, v});
    }
}

void SpMat::add_at(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, int col) { return p.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

SpMat SpMat::operator+(const SpMat& o) const {
    SpMat out = *this;
    for (int r = 0; r < n_; ++r)
        for (const auto& [c, v] : o.rows_[r]) out.add_at(r, c, v);
    return out;
}

SpMat SpMat::operator-(const SpMat& o) const {
    SpMat out = *this;
    for (int r = 0; r < n_; ++r)
        for (const auto& [c, v] : o.rows_[r]) out.add_at(r, c, -v);
    return out;
}

SpMat SpMat::operator*(const SpMat& o) const {
    SpMat out(n_, spec_);
    for (int r = 0; r < n_; ++r)
        for (const auto& [k, v] : rows_[r])
            for (const auto& [c, w] : o.rows_[k]) out.add_at(r, c, v * w);
    return out;
}

SpMat SpMat::operator*(const Scalar& c) const {
    SpMat out(n_, spec_);
    if (c.is_zero()) return out;
    out = *this;
    for (auto& row : out.rows_)
        for (auto& [col, v] : row) v *= c;
    return out;
}

bool SpMat::operator==(const SpMat& o) const {
    if (n_ != o.n_) return false;
    return (*this - o).is_zero();
}

SpMat SpMat::scale_cols(const std::function<Scalar(int)>& s) const {
    SpMat out(n_, spec_);
    for (int r = 0; r < n_; ++r)
        for (const auto& [c, v] : rows_[r]) out.add_at(r, c, v * s(c));
    return out;
}

std::string SpMat::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < n_; ++r)
        for (const auto& [c, v] : rows_[r])
            os << "(" << r + 1 << "," << c + 1 << ") = " << v.to_string() << "\n";
    return os.str();
}

std::vector<Rat> Representation::weight(int a) const {
    std::vector<Rat> mu(spec->rank);
    for (int j = 0; j < spec->rank; ++j) mu[j] = t_weights[j][a];
    return mu;
}

Scalar Representation::t_eigenvalue(const std::vector<Rat>& texp, int basis) const {
    Rat ex(0);
    for (int j = 0; j < spec->rank; ++j) ex += spec->d[j] * t_weights[j][basis] * texp[j];
    return Scalar::q_pow(spec->scalar, ex);
}

SpMat Representation::t_diag(const std::vector<Rat>& texp) const {
    SpMat m(dim, spec->scalar);
    for (int a = 0; a < dim; ++a) m.set(a, a, t_eigenvalue(texp, a));
    return m;
}

Representation minimal_rep_an(int N) {
    Representation rep;
    rep.spec = make_an(N);
    rep.dim = N + 1;
    rep.label = "a" + std::to_string(N) + " minimal";
    rep.t_weights.assign(N, std::vector<Rat>(rep.dim, Rat(0)));
    for (int j = 0; j < N; ++j)
        for (int a = 0; a < rep.dim; ++a)
            rep.t_weights[j][a] = Rat((a == j ? 1 : 0) - (a - 1 == j ? 1 : 0));
    Scalar one = Scalar::one(rep.spec->scalar);
    for (int j = 0; j < N; ++j) {
        SpMat e(rep.dim, rep.spec->scalar), f(rep.dim, rep.spec->scalar);
        e.set(j, j + 1, one);
        f.set(j + 1, j, one);
        rep.e_mats.push_back(e);
        rep.f_mats.push_back(f);
    }
    return rep;
}

Representation minimal_rep_g2() {
    Representation rep;
    rep.spec = make_g2();
    rep.dim = 7;
    rep.label = "g2 minimal";
    // Exponents of q_1 and q_2 on the seven basis states.
    rep.t_weights = {
        {Rat(0), Rat(1), Rat(-1), Rat(0), Rat(1), Rat(-1), Rat(0)},
        {Rat(1), Rat(-1), Rat(2), Rat(0), Rat(-2), Rat(1), Rat(-1)},
    };
    Scalar one = Scalar::one(rep.spec->scalar);
    Scalar s = Scalar::sqrt_sym(rep.spec->scalar);
    SpMat e1(7, rep.spec->scalar), f1(7, rep.spec->scalar);
    SpMat e2(7, rep.spec->scalar), f2(7, rep.spec->scalar);
    e1.set(1, 2, one);
    e1.set(4, 5, one);
    f1.set(2, 1, one);
    f1.set(5, 4, one);
    e2.set(0, 1, one);
    e2.set(5, 6, one);
    f2.set(1, 0, one);
    f2.set(6, 5, one);
    e2.set(2, 3, s);
    e2.set(3, 4, s);
    f2.set(3, 2, s);
    f2.set(4, 3, s);
    rep.e_mats = {e1, e2};
    rep.f_mats = {f1, f2};
    return rep;
}

SpMat evaluate_expr(const NcExpr& x, const Representation& rep) {
    if (!(*x.spec() == *rep.spec)) throw Error("evaluate_expr: algebra spec mismatch");
    SpMat out(rep.dim, rep.spec->scalar);
    for (const auto& term : x.terms()) {
        SpMat m = SpMat::identity(rep.dim, rep.spec->scalar);
        for (const Gen& g : term.mono.word) {
            if (g.idx >= rep.spec->rank) throw Error("evaluate_expr: generator out of range");
            m = m * (g.f ? rep.f_mats[g.idx] : rep.e_mats[g.idx]);
        }
        bool t_trivial = std::all_of(term.mono.texp.begin(), term.mono.texp.end(),
                                     [](const Rat& r) { return r == 0; });
        if (!t_trivial)
            m = m.scale_cols([&](int c) { return rep.t_eigenvalue(term.mono.texp, c); });
        out = out + m * term.coeff;
    }
    return out;
}

Representation tensor_rep(const Representation& r1, const Representation& r2) {
    if (!(*r1.spec == *r2.spec)) throw Error("tensor_rep: algebra spec mismatch");
    Representation rep;
    rep.spec = r1.spec;
    rep.dim = r1.dim * r2.dim;
    rep.label = "(" + r1.label + ") (x) (" + r2.label + ")";
    int n2 = r2.dim;
    auto idx = [n2](int a, int b) { return a * n2 + b; };
    rep.t_weights.assign(rep.spec->rank, std::vector<Rat>(rep.dim, Rat(0)));
    for (int j = 0; j < rep.spec->rank; ++j)
        for (int a = 0; a < r1.dim; ++a)
            for (int b = 0; b < r2.dim; ++b)
                rep.t_weights[j][idx(a, b)] = r1.t_weights[j][a] + r2.t_weights[j][b];
    for (int j = 0; j < rep.spec->rank; ++j) {
        // Delta(e) = e (x) 1 + t (x) e; Delta(f) = f (x) t^{-1} + 1 (x) f.
        SpMat e(rep.dim, rep.spec->scalar), f(rep.dim, rep.spec->scalar);
        for (int a = 0; a < r1.dim; ++a) {
            for (const auto& [c, v] : r1.e_mats[j].row(a))
                for (int b = 0; b < r2.dim; ++b) e.add_at(idx(a, b), idx(c, b), v);
            for (const auto& [c, v] : r1.f_mats[j].row(a))
                for (int b = 0; b < r2.dim; ++b) {
                    Rat ex = -rep.spec->d[j] * r2.t_weights[j][b];
                    f.add_at(idx(a, b), idx(c, b), v * Scalar::q_pow(rep.spec->scalar, ex));
                }
        }
        for (int b = 0; b < r2.dim; ++b) {
            for (const auto& [c, v] : r2.e_mats[j].row(b))
                for (int a = 0; a < r1.dim; ++a) {
                    Rat ex = rep.spec->d[j] * r1.t_weights[j][a];
                    e.add_at(idx(a, b), idx(a, c), v * Scalar::q_pow(rep.spec->scalar, ex));
                }
            for (const auto& [c, v] : r2.f_mats[j].row(b))
                for (int a = 0; a < r1.dim; ++a) f.add_at(idx(a, b), idx(a, c), v);
        }
        rep.e_mats.push_back(e);
        rep.f_mats.push_back(f);
    }
    return rep;
}

void CheckReport::add(const std::string& name, bool ok, const std::string& residual) {
    items.push_back({name, ok, residual});
    pass = pass && ok;
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    for (const auto& it : items) {
        os << (it.pass ? "pass" : "FAIL") << "  " << it.name;
        if (!it.pass && !it.residual.empty()) os << "\n      residual: " << it.residual;
        os << "\n";
    }
    return os.str();
}

CheckReport check_relations(const Representation& rep) {
    CheckReport rpt;
    const auto& spec = rep.spec;
    int r = spec->rank;
    auto zero_check = [&](const std::string& name, const SpMat& m) {
        rpt.add(name, m.is_zero(), m.is_zero() ? "" : m.to_string());
    };
    std::vector<SpMat> t(r), tinv(r);
    for (int j = 0; j < r; ++j) {
        std::vector<Rat> ex(r, Rat(0));
        ex[j] = 1;
        t[j] = rep.t_diag(ex);
        ex[j] = -1;
        tinv[j] = rep.t_diag(ex);
    }
    SpMat id = SpMat::identity(rep.dim, spec->scalar);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            zero_check("t" + std::to_string(i + 1) + " t" + std::to_string(j + 1) + " commute",
                       t[i] * t[j] - t[j] * t[i]);
    for (int j = 0; j < r; ++j)
        zero_check("t" + std::to_string(j + 1) + " invertible", t[j] * tinv[j] - id);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Scalar qa = spec->qi_pow(i, Rat(spec->cartan[i][j]));
            zero_check("t" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + " exchange",
                       t[i] * rep.e_mats[j] - rep.e_mats[j] * t[i] * qa);
            zero_check("t" + std::to_string(i + 1) + " f" + std::to_string(j + 1) + " exchange",
                       t[i] * rep.f_mats[j] - rep.f_mats[j] * t[i] * qa.inv());
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            SpMat lhs = rep.e_mats[i] * rep.f_mats[j] - rep.f_mats[j] * rep.e_mats[i];
            if (i == j) lhs = lhs - (t[j] - tinv[j]) * spec->omega(j).inv();
            zero_check("[e" + std::to_string(i + 1) + ", f" + std::to_string(j + 1) + "]", lhs);
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            zero_check("serre e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                       evaluate_expr(serre_element(spec, i, j, false), rep));
            zero_check("serre f(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                       evaluate_expr(serre_element(spec, i, j, true), rep));
        }
    return rpt;
}

CheckReport check_hopf(const Representation& rep) {
    CheckReport rpt;
    const auto& spec = rep.spec;
    std::vector<NcExpr> gens;
    std::vector<std::string> names;
    for (int j = 0; j < spec->rank; ++j) {
        std::vector<Rat> ex(spec->rank, Rat(0));
        ex[j] = 1;
        gens.push_back(nc_t_monomial(spec, ex));
        names.push_back("t" + std::to_string(j + 1));
        gens.push_back(nc_gen(spec, Gen{false, j}));
        names.push_back("e" + std::to_string(j + 1));
        gens.push_back(nc_gen(spec, Gen{true, j}));
        names.push_back("f" + std::to_string(j + 1));
    }
    SpMat id = SpMat::identity(rep.dim, spec->scalar);
    for (size_t k = 0; k < gens.size(); ++k) {
        TensorExpr dx = coproduct(gens[k]);
        SpMat left(rep.dim, spec->scalar), right(rep.dim, spec->scalar);
        for (const auto& tt : dx.terms()) {
            NcExpr l(spec, {NcTerm{Scalar::one(spec->scalar), tt.left}});
            NcExpr rr(spec, {NcTerm{Scalar::one(spec->scalar), tt.right}});
            left = left + (evaluate_expr(antipode(l), rep) * evaluate_expr(rr, rep)) * tt.coeff;
            right = right + (evaluate_expr(l, rep) * evaluate_expr(antipode(rr), rep)) * tt.coeff;
        }
        SpMat target = id * counit(gens[k]);
        rpt.add("m(S (x) id)Delta(" + names[k] + ")", (left - target).is_zero());
        rpt.add("m(id (x) S)Delta(" + names[k] + ")", (right - target).is_zero());
    }
    return rpt;
}

}  // namespace qea
