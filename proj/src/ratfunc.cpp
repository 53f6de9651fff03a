#include "qea/ratfunc.hpp"

#include "qea/error.hpp"

namespace qea {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw Error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(Rat(1));
        return;
    }
    // Move the v-power content of den into num; den becomes a true polynomial.
    if (den_.low() != 0) {
        num_ = num_.shifted(-den_.low());
        den_ = den_.shifted(-den_.low());
    }
    LaurentPoly g = LaurentPoly::poly_gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        LaurentPoly q, r;
        int nlow = num_.low();
        LaurentPoly::divmod(num_.poly_part(), g, q, r);
        num_ = q.shifted(nlow);
        LaurentPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rat lc = den_.leading();
    if (lc != 1) {
        Rat ilc = Rat(1) / lc;
        num_ = num_ * ilc;
        den_ = den_ * ilc;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& v0) const {
    Rat d = den_.eval(v0);
    if (d == 0) throw Error("RatFunc::eval: pole at v = " + v0.get_str());
    return num_.eval(v0) / d;
}

int RatFunc::degree_size() const {
    if (is_zero()) return 0;
    return (num_.high() - num_.low()) + (den_.high() - den_.low()) + std::abs(num_.low());
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_laurent()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace qea
