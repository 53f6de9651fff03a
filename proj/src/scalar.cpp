#include "qea/scalar.hpp"

#include <sstream>

#include "qea/error.hpp"

namespace qea {

ScalarSpecPtr make_scalar_spec(int root_order) {
    if (root_order < 1) throw Error("ScalarSpec: root order must be >= 1");
    auto s = std::make_shared<ScalarSpec>();
    s->root_order = root_order;
    return s;
}

ScalarSpecPtr make_scalar_spec(int root_order, const LaurentPoly& sqrt_adjoined) {
    if (root_order < 1) throw Error("ScalarSpec: root order must be >= 1");
    if (sqrt_adjoined.is_zero()) throw Error("ScalarSpec: adjoined square must be nonzero");
    auto s = std::make_shared<ScalarSpec>();
    s->root_order = root_order;
    s->sqrt_adjoined = sqrt_adjoined;
    return s;
}

QuadNum QuadNum::operator+(const QuadNum& o) const { return {p + o.p, r + o.r, r == 0 ? o.disc : disc}; }
QuadNum QuadNum::operator-(const QuadNum& o) const { return {p - o.p, r - o.r, r == 0 ? o.disc : disc}; }

QuadNum QuadNum::operator*(const QuadNum& o) const {
    Rat d = r != 0 ? disc : o.disc;
    return {p * o.p + r * o.r * d, p * o.r + r * o.p, d};
}

bool QuadNum::operator==(const QuadNum& o) const { return p == o.p && r == o.r; }

std::string QuadNum::to_string() const {
    if (r == 0) return p.get_str();
    std::ostringstream os;
    os << p.get_str() << " + " << r.get_str() << "*sqrt(" << disc.get_str() << ")";
    return os.str();
}

Scalar::Scalar(ScalarSpecPtr spec, RatFunc a, RatFunc b)
    : spec_(std::move(spec)), a_(std::move(a)), b_(std::move(b)) {}

Scalar Scalar::zero(const ScalarSpecPtr& spec) { return {spec, RatFunc{}, RatFunc{}}; }
Scalar Scalar::one(const ScalarSpecPtr& spec) { return {spec, RatFunc(Rat(1)), RatFunc{}}; }
Scalar Scalar::of(const ScalarSpecPtr& spec, const Rat& c) { return {spec, RatFunc(c), RatFunc{}}; }
Scalar Scalar::of(const ScalarSpecPtr& spec, const RatFunc& a) { return {spec, a, RatFunc{}}; }

Scalar Scalar::of(const ScalarSpecPtr& spec, const RatFunc& a, const RatFunc& b) {
    if (!b.is_zero() && !spec->sqrt_adjoined)
        throw Error("Scalar: square-root part without an adjoined root");
    return {spec, a, b};
}

Scalar Scalar::v_pow(const ScalarSpecPtr& spec, int e) {
    return {spec, RatFunc(LaurentPoly(Rat(1), e)), RatFunc{}};
}

Scalar Scalar::q_pow(const ScalarSpecPtr& spec, const Rat& x) {
    Rat e = x * spec->root_order;
    e.canonicalize();
    if (e.get_den() != 1)
        throw Error("Scalar: exponent q^(" + x.get_str() + ") is not representable with L = " +
                    std::to_string(spec->root_order));
    return v_pow(spec, static_cast<int>(e.get_num().get_si()));
}

Scalar Scalar::sqrt_sym(const ScalarSpecPtr& spec) {
    if (!spec->sqrt_adjoined) throw Error("Scalar: no square root adjoined");
    return {spec, RatFunc{}, RatFunc(Rat(1))};
}

void Scalar::require_spec(const Scalar& o) const {
    if (!spec_ || !o.spec_) throw Error("Scalar: unattached value in arithmetic");
    if (spec_ != o.spec_ && !(*spec_ == *o.spec_)) throw Error("Scalar: spec mismatch");
}

Scalar Scalar::operator-() const { return {spec_, -a_, -b_}; }

Scalar Scalar::operator+(const Scalar& o) const {
    require_spec(o);
    return {spec_, a_ + o.a_, b_ + o.b_};
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_spec(o);
    return {spec_, a_ - o.a_, b_ - o.b_};
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_spec(o);
    if (b_.is_zero() && o.b_.is_zero()) return {spec_, a_ * o.a_, RatFunc{}};
    RatFunc delta(spec_->sqrt_adjoined ? *spec_->sqrt_adjoined : LaurentPoly{});
    return {spec_, a_ * o.a_ + b_ * o.b_ * delta, a_ * o.b_ + b_ * o.a_};
}

Scalar Scalar::inv() const {
    if (!spec_) throw Error("Scalar: unattached value");
    if (is_zero()) throw Error("Scalar: division by zero");
    if (b_.is_zero()) return {spec_, a_.inv(), RatFunc{}};
    RatFunc delta(*spec_->sqrt_adjoined);
    RatFunc norm = a_ * a_ - b_ * b_ * delta;
    if (norm.is_zero()) throw Error("Scalar: non-invertible element (zero norm)");
    RatFunc in = norm.inv();
    return {spec_, a_ * in, -(b_ * in)};
}

bool Scalar::operator==(const Scalar& o) const {
    require_spec(o);
    return a_ == o.a_ && b_ == o.b_;
}

Scalar Scalar::bar() const { return {spec_, a_.bar(), b_.bar()}; }

QuadNum Scalar::eval_at(const Rat& v0) const {
    if (!spec_) throw Error("Scalar: unattached value");
    if (v0 == 0) throw Error("Scalar::eval_at: v = 0 excluded");
    QuadNum out;
    out.p = a_.eval(v0);
    out.r = b_.eval(v0);
    out.disc = spec_->sqrt_adjoined ? spec_->sqrt_adjoined->eval(v0) : Rat(0);
    return out;
}

std::string Scalar::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string out;
    if (!a_.is_zero()) out = a_.to_string() + " + ";
    out += "(" + b_.to_string() + ")*s";
    return out;
}

Scalar qnum(const ScalarSpecPtr& spec, long m, const Rat& d) {
    Rat le = d * spec->root_order;
    le.canonicalize();
    if (le.get_den() != 1) throw Error("qnum: base exponent q^(" + d.get_str() + ") not representable");
    int e = static_cast<int>(le.get_num().get_si());
    if (e == 0) throw Error("qnum: base q^0 degenerate");
    if (m == 0) return Scalar::zero(spec);
    long am = std::labs(m);
    // [m] = v^{e(m-1)} + v^{e(m-3)} + ... + v^{-e(m-1)}.
    std::map<int, Rat> coeffs;
    for (long k = 0; k < am; ++k) coeffs[static_cast<int>(e * (am - 1 - 2 * k))] += 1;
    Scalar r = Scalar::of(spec, RatFunc(LaurentPoly::from_map(coeffs)));
    return m > 0 ? r : -r;
}

Scalar qbinom(const ScalarSpecPtr& spec, long n, long k, const Rat& d) {
    if (k < 0 || k > n) throw Error("qbinom: k out of range");
    Scalar r = Scalar::one(spec);
    for (long i = 1; i <= k; ++i) r = r * qnum(spec, n - k + i, d) / qnum(spec, i, d);
    if (!r.a().is_laurent() || !r.b().is_zero())
        throw Error("qbinom: result failed to reduce to a Laurent polynomial");
    return r;
}

}  // namespace qea
