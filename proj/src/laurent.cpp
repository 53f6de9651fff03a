#include "qea/laurent.hpp"

#include <sstream>

#include "qea/error.hpp"

namespace qea {

LaurentPoly::LaurentPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

LaurentPoly::LaurentPoly(const Rat& c, int e) {
    if (c != 0) {
        low_ = e;
        c_.push_back(c);
    }
}

LaurentPoly LaurentPoly::from_map(const std::map<int, Rat>& coeffs) {
    LaurentPoly p;
    if (coeffs.empty()) return p;
    p.low_ = coeffs.begin()->first;
    p.c_.assign(coeffs.rbegin()->first - p.low_ + 1, Rat(0));
    for (const auto& [e, c] : coeffs) p.c_[e - p.low_] = c;
    p.trim();
    return p;
}

bool LaurentPoly::is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1; }

const Rat& LaurentPoly::coeff(int e) const {
    static const Rat kZero(0);
    if (is_zero() || e < low_ || e > high()) return kZero;
    return c_[e - low_];
}

std::map<int, Rat> LaurentPoly::to_map() const {
    std::map<int, Rat> m;
    for (size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) m[low_ + static_cast<int>(k)] = c_[k];
    return m;
}

void LaurentPoly::trim() {
    size_t b = 0, e = c_.size();
    while (b < e && c_[b] == 0) ++b;
    while (e > b && c_[e - 1] == 0) --e;
    if (b == e) {
        c_.clear();
        low_ = 0;
        return;
    }
    if (b > 0 || e < c_.size()) {
        std::vector<Rat> out(c_.begin() + b, c_.begin() + e);
        c_.swap(out);
        low_ += static_cast<int>(b);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    LaurentPoly r;
    r.low_ = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    r.c_.assign(hi - r.low_ + 1, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) r.c_[low_ - r.low_ + k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r.c_[o.low_ - r.low_ + k] += o.c_[k];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    LaurentPoly r;
    r.low_ = low_ + o.low_;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    if (c == 0) return {};
    LaurentPoly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly r(*this);
    if (!r.is_zero()) r.low_ += e;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.low_ = -high();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
}

Rat LaurentPoly::eval(const Rat& v0_in) const {
    Rat v0 = v0_in;
    v0.canonicalize();
    if (is_zero()) return Rat(0);
    if (v0 == 0) {
        if (low_ < 0) throw Error("LaurentPoly::eval: pole at v = 0");
        return coeff(0);
    }
    // Horner over the coefficient block, then one power of v0^low.
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v0 + *it;
    Rat p(1);
    int e = low_;
    Rat base = v0;
    if (e < 0) {
        base = Rat(v0.get_den(), v0.get_num());
        base.canonicalize();
    }
    for (int k = std::abs(e); k > 0; --k) p *= base;
    return acc * p;
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
    if (b.is_zero()) throw Error("LaurentPoly::divmod: division by zero");
    if (a.low() < 0 || b.low() < 0) throw Error("LaurentPoly::divmod: expects true polynomials");
    q = LaurentPoly{};
    r = a;
    std::map<int, Rat> qm;
    while (!r.is_zero() && r.high() >= b.high()) {
        Rat c = r.leading() / b.leading();
        int e = r.high() - b.high();
        qm[e] += c;
        r = r - b * LaurentPoly(c, e);
    }
    q = LaurentPoly::from_map(qm);
}

LaurentPoly LaurentPoly::poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a.poly_part(), y = b.poly_part();
    while (!y.is_zero()) {
        LaurentPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r.is_zero() ? r : r * (Rat(1) / r.leading());
    }
    if (x.is_zero()) return x;
    return x * (Rat(1) / x.leading());
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest power first.
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        const Rat& c = c_[k];
        if (c == 0) continue;
        int e = low_ + k;
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (ac != 1 || e == 0) os << ac.get_str();
        if (e != 0) {
            if (ac != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace qea
