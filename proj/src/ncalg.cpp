#include "qea/ncalg.hpp"

#include <algorithm>
#include <sstream>

#include "qea/error.hpp"

namespace qea {

Rat AlgebraSpec::cross(const std::vector<Rat>& mu, int j) const {
    Rat s(0);
    for (int i = 0; i < rank; ++i) s += d[i] * cartan[i][j] * mu[i];
    return s;
}

Scalar AlgebraSpec::qi_pow(int j, const Rat& exponent) const {
    return Scalar::q_pow(scalar, d[j] * exponent);
}

Scalar AlgebraSpec::omega(int j) const { return qi_pow(j, 1) - qi_pow(j, -1); }

bool AlgebraSpec::operator==(const AlgebraSpec& o) const {
    return family == o.family && rank == o.rank && cartan == o.cartan && d == o.d &&
           *scalar == *o.scalar;
}

namespace {

void check_algebra_data(const AlgebraSpec& s) {
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j) {
            if (s.d[i] * s.cartan[i][j] != s.d[j] * s.cartan[j][i])
                throw Error("AlgebraSpec: Cartan matrix not symmetrizable");
            Rat dot(0);
            for (int k = 0; k < s.rank; ++k) dot += s.cartan_inv[i][k] * s.cartan[k][j];
            if (dot != Rat(i == j ? 1 : 0)) throw Error("AlgebraSpec: bad inverse Cartan matrix");
        }
}

}  // namespace

AlgebraSpecPtr make_an(int N) {
    if (N < 1) throw Error("make_an: N >= 1 required");
    auto s = std::make_shared<AlgebraSpec>();
    s->family = AlgebraSpec::Family::AN;
    s->rank = N;
    s->name = "a" + std::to_string(N);
    s->cartan.assign(N, std::vector<int>(N, 0));
    for (int i = 0; i < N; ++i) {
        s->cartan[i][i] = 2;
        if (i + 1 < N) s->cartan[i][i + 1] = s->cartan[i + 1][i] = -1;
    }
    s->d.assign(N, Rat(1));
    s->cartan_inv.assign(N, std::vector<Rat>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            s->cartan_inv[i][j] = Rat(std::min(i, j) + 1) - Rat((i + 1) * (j + 1), N + 1);
            s->cartan_inv[i][j].canonicalize();
        }
    s->scalar = make_scalar_spec(N + 1);
    check_algebra_data(*s);
    return s;
}

AlgebraSpecPtr make_g2() {
    auto s = std::make_shared<AlgebraSpec>();
    s->family = AlgebraSpec::Family::G2;
    s->rank = 2;
    s->name = "g2";
    s->cartan = {{2, -1}, {-3, 2}};
    s->d = {Rat(1), Rat(1, 3)};
    s->cartan_inv = {{Rat(2), Rat(1)}, {Rat(3), Rat(2)}};
    // s^2 = [2] in base q_2 = v.
    s->scalar = make_scalar_spec(3, LaurentPoly(Rat(1), 1) + LaurentPoly(Rat(1), -1));
    check_algebra_data(*s);
    return s;
}

bool Mono::operator<(const Mono& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    for (size_t k = 0; k < word.size(); ++k)
        if (!(word[k] == o.word[k])) return word[k] < o.word[k];
    for (size_t k = 0; k < texp.size(); ++k)
        if (texp[k] != o.texp[k]) return texp[k] < o.texp[k];
    return false;
}

NcExpr::NcExpr(AlgebraSpecPtr spec, std::vector<NcTerm> terms) : spec_(std::move(spec)) {
    std::sort(terms.begin(), terms.end(),
              [](const NcTerm& a, const NcTerm& b) { return a.mono < b.mono; });
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

NcExpr NcExpr::operator-() const {
    std::vector<NcTerm> out = terms_;
    for (auto& t : out) t.coeff = -t.coeff;
    NcExpr r;
    r.spec_ = spec_;
    r.terms_ = std::move(out);
    return r;
}

NcExpr NcExpr::operator+(const NcExpr& o) const {
    std::vector<NcTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return NcExpr(spec_ ? spec_ : o.spec_, std::move(all));
}

NcExpr NcExpr::operator-(const NcExpr& o) const { return *this + (-o); }

Scalar mono_mul(const AlgebraSpecPtr& spec, const Mono& x, const Mono& y, Mono& out) {
    out.word = x.word;
    out.word.insert(out.word.end(), y.word.begin(), y.word.end());
    out.texp.assign(spec->rank, Rat(0));
    for (int i = 0; i < spec->rank; ++i) out.texp[i] = x.texp[i] + y.texp[i];
    // t^mu e_j = q^{+cross(mu,j)} e_j t^mu and t^mu f_j = q^{-cross(mu,j)} f_j t^mu.
    Rat ex(0);
    for (const Gen& g : y.word) {
        Rat c = spec->cross(x.texp, g.idx);
        ex += g.f ? -c : c;
    }
    return Scalar::q_pow(spec->scalar, ex);
}

NcExpr NcExpr::operator*(const NcExpr& o) const {
    if (spec_ && o.spec_ && spec_ != o.spec_ && !(*spec_ == *o.spec_))
        throw Error("NcExpr: algebra spec mismatch");
    std::vector<NcTerm> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& tx : terms_)
        for (const auto& ty : o.terms_) {
            NcTerm t;
            Scalar fac = mono_mul(spec_, tx.mono, ty.mono, t.mono);
            t.coeff = tx.coeff * ty.coeff * fac;
            out.push_back(std::move(t));
        }
    return NcExpr(spec_ ? spec_ : o.spec_, std::move(out));
}

NcExpr NcExpr::operator*(const Scalar& c) const {
    std::vector<NcTerm> out = terms_;
    for (auto& t : out) t.coeff = t.coeff * c;
    return NcExpr(spec_, std::move(out));
}

bool NcExpr::operator==(const NcExpr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t k = 0; k < terms_.size(); ++k)
        if (!(terms_[k].mono == o.terms_[k].mono) || terms_[k].coeff != o.terms_[k].coeff)
            return false;
    return true;
}

namespace {

std::string mono_str(const Mono& m) {
    std::ostringstream os;
    if (m.word.empty() && std::all_of(m.texp.begin(), m.texp.end(), [](const Rat& r) { return r == 0; }))
        return "1";
    bool any = false;
    for (const Gen& g : m.word) {
        if (any) os << " ";
        os << (g.f ? "f" : "e") << (g.idx + 1);
        any = true;
    }
    for (size_t j = 0; j < m.texp.size(); ++j) {
        if (m.texp[j] == 0) continue;
        if (any) os << " ";
        os << "t" << (j + 1);
        if (m.texp[j] != 1) os << "^(" << m.texp[j].get_str() << ")";
        any = true;
    }
    return os.str();
}

}  // namespace

std::string NcExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.to_string() << ") " << mono_str(t.mono);
    }
    return os.str();
}

NcExpr nc_one(const AlgebraSpecPtr& spec) {
    return nc_term(spec, Scalar::one(spec->scalar), {}, std::vector<Rat>(spec->rank, Rat(0)));
}

NcExpr nc_gen(const AlgebraSpecPtr& spec, Gen g) {
    if (g.idx < 0 || g.idx >= spec->rank) throw Error("nc_gen: generator index out of range");
    return nc_term(spec, Scalar::one(spec->scalar), {g}, std::vector<Rat>(spec->rank, Rat(0)));
}

NcExpr nc_word(const AlgebraSpecPtr& spec, const Word& w) {
    return nc_term(spec, Scalar::one(spec->scalar), w, std::vector<Rat>(spec->rank, Rat(0)));
}

NcExpr nc_t_monomial(const AlgebraSpecPtr& spec, const std::vector<Rat>& texp) {
    return nc_term(spec, Scalar::one(spec->scalar), {}, texp);
}

NcExpr nc_term(const AlgebraSpecPtr& spec, const Scalar& c, const Word& w, const std::vector<Rat>& texp) {
    if (static_cast<int>(texp.size()) != spec->rank) throw Error("nc_term: bad t-exponent size");
    NcTerm t;
    t.coeff = c;
    t.mono.word = w;
    t.mono.texp = texp;
    for (auto& r : t.mono.texp) r.canonicalize();
    return NcExpr(spec, {std::move(t)});
}

TensorExpr::TensorExpr(AlgebraSpecPtr spec, std::vector<TensorTerm> terms) : spec_(std::move(spec)) {
    std::sort(terms.begin(), terms.end(), [](const TensorTerm& a, const TensorTerm& b) {
        if (!(a.left == b.left)) return a.left < b.left;
        return a.right < b.right;
    });
    for (auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        if (!terms_.empty() && terms_.back().left == t.left && terms_.back().right == t.right) {
            terms_.back().coeff += t.coeff;
            if (terms_.back().coeff.is_zero()) terms_.pop_back();
        } else {
            terms_.push_back(std::move(t));
        }
    }
}

TensorExpr TensorExpr::operator+(const TensorExpr& o) const {
    std::vector<TensorTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return TensorExpr(spec_ ? spec_ : o.spec_, std::move(all));
}

TensorExpr TensorExpr::operator-(const TensorExpr& o) const {
    std::vector<TensorTerm> neg = o.terms_;
    for (auto& t : neg) t.coeff = -t.coeff;
    std::vector<TensorTerm> all = terms_;
    all.insert(all.end(), neg.begin(), neg.end());
    return TensorExpr(spec_ ? spec_ : o.spec_, std::move(all));
}

TensorExpr TensorExpr::operator*(const TensorExpr& o) const {
    std::vector<TensorTerm> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& tx : terms_)
        for (const auto& ty : o.terms_) {
            TensorTerm t;
            Scalar fl = mono_mul(spec_, tx.left, ty.left, t.left);
            Scalar fr = mono_mul(spec_, tx.right, ty.right, t.right);
            t.coeff = tx.coeff * ty.coeff * fl * fr;
            out.push_back(std::move(t));
        }
    return TensorExpr(spec_ ? spec_ : o.spec_, std::move(out));
}

bool TensorExpr::operator==(const TensorExpr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const auto& a = terms_[k];
        const auto& b = o.terms_[k];
        if (!(a.left == b.left) || !(a.right == b.right) || a.coeff != b.coeff) return false;
    }
    return true;
}

std::string TensorExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.to_string() << ") " << mono_str(t.left) << " (x) " << mono_str(t.right);
    }
    return os.str();
}

TensorExpr coproduct(const NcExpr& x) {
    const auto& spec = x.spec();
    std::vector<Rat> zero(spec->rank, Rat(0));
    TensorExpr result(spec);
    for (const auto& term : x.terms()) {
        TensorTerm seed;
        seed.coeff = term.coeff;
        seed.left.texp = zero;
        seed.right.texp = zero;
        TensorExpr acc(spec, {seed});
        for (const Gen& g : term.mono.word) {
            std::vector<Rat> tg = zero;
            TensorExpr dg(spec);
            if (!g.f) {
                // e (x) 1 + t (x) e
                tg[g.idx] = 1;
                TensorTerm t1;
                t1.coeff = Scalar::one(spec->scalar);
                t1.left = {{g}, zero};
                t1.right = {{}, zero};
                TensorTerm t2;
                t2.coeff = Scalar::one(spec->scalar);
                t2.left = {{}, tg};
                t2.right = {{g}, zero};
                dg = TensorExpr(spec, {t1, t2});
            } else {
                // f (x) t^{-1} + 1 (x) f
                tg[g.idx] = -1;
                TensorTerm t1;
                t1.coeff = Scalar::one(spec->scalar);
                t1.left = {{g}, zero};
                t1.right = {{}, tg};
                TensorTerm t2;
                t2.coeff = Scalar::one(spec->scalar);
                t2.left = {{}, zero};
                t2.right = {{g}, zero};
                dg = TensorExpr(spec, {t1, t2});
            }
            acc = acc * dg;
        }
        TensorTerm tmono;
        tmono.coeff = Scalar::one(spec->scalar);
        tmono.left = {{}, term.mono.texp};
        tmono.right = {{}, term.mono.texp};
        acc = acc * TensorExpr(spec, {tmono});
        result = result + acc;
    }
    return result;
}

Scalar counit(const NcExpr& x) {
    Scalar s = Scalar::zero(x.spec()->scalar);
    for (const auto& t : x.terms())
        if (t.mono.word.empty()) s += t.coeff;
    return s;
}

NcExpr antipode(const NcExpr& x, bool inverse) {
    const auto& spec = x.spec();
    NcExpr result(spec);
    for (const auto& term : x.terms()) {
        std::vector<Rat> neg = term.mono.texp;
        for (auto& r : neg) r = -r;
        NcExpr acc = nc_t_monomial(spec, neg) * term.coeff;
        for (auto it = term.mono.word.rbegin(); it != term.mono.word.rend(); ++it) {
            const Gen g = *it;
            std::vector<Rat> tg(spec->rank, Rat(0));
            NcExpr img(spec);
            if (!inverse) {
                if (!g.f) {
                    tg[g.idx] = -1;  // -t^{-1} e
                    img = nc_t_monomial(spec, tg) * nc_gen(spec, g) * (-Scalar::one(spec->scalar));
                } else {
                    tg[g.idx] = 1;  // -f t
                    img = nc_term(spec, -Scalar::one(spec->scalar), {g}, tg);
                }
            } else {
                if (!g.f) {
                    tg[g.idx] = -1;  // -e t^{-1}
                    img = nc_term(spec, -Scalar::one(spec->scalar), {g}, tg);
                } else {
                    tg[g.idx] = 1;  // -t f
                    img = nc_t_monomial(spec, tg) * nc_gen(spec, g) * (-Scalar::one(spec->scalar));
                }
            }
            acc = acc * img;
        }
        result = result + acc;
    }
    return result;
}

std::vector<int> weight_of(const Word& w) {
    int rank_needed = 0;
    bool has_e = false, has_f = false;
    for (const Gen& g : w) {
        (g.f ? has_f : has_e) = true;
        rank_needed = std::max(rank_needed, g.idx + 1);
    }
    if (has_e && has_f) throw Error("weight_of: mixed e/f word");
    std::vector<int> beta(rank_needed, 0);
    for (const Gen& g : w) ++beta[g.idx];
    return beta;
}

std::vector<int> expr_weight(const NcExpr& x) {
    if (x.is_zero()) throw Error("expr_weight: zero expression has no weight");
    std::vector<int> beta;
    bool first = true;
    for (const auto& t : x.terms()) {
        std::vector<int> b = weight_of(t.mono.word);
        b.resize(x.spec()->rank, 0);
        if (first) {
            beta = b;
            first = false;
        } else if (b != beta) {
            throw Error("expr_weight: expression is not weight-homogeneous");
        }
    }
    return beta;
}

NcExpr serre_element(const AlgebraSpecPtr& spec, int i, int j, bool f_kind) {
    if (i == j) throw Error("serre_element: requires i != j");
    if (i < 0 || j < 0 || i >= spec->rank || j >= spec->rank)
        throw Error("serre_element: index out of range");
    int top = 1 - spec->cartan[i][j];
    Gen xi{f_kind, i}, xj{f_kind, j};
    NcExpr sum(spec);
    for (int n = 0; n <= top; ++n) {
        Word w;
        w.insert(w.end(), top - n, xi);
        w.push_back(xj);
        w.insert(w.end(), n, xi);
        Scalar c = qbinom(spec->scalar, top, n, spec->d[i]);
        if (n % 2) c = -c;
        sum = sum + nc_word(spec, w) * c;
    }
    return sum;
}

}  // namespace qea
