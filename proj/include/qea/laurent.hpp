#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace qea {

using Rat = mpq_class;

/// Laurent polynomial in one variable v with rational coefficients.
/// Stored as a contiguous coefficient block: coeff(low_ + k) = c_[k].
/// Invariant: c_ is empty (the zero polynomial) or both ends are nonzero.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& constant);
    /// Monomial c * v^e.
    LaurentPoly(const Rat& c, int e);
    static LaurentPoly from_map(const std::map<int, Rat>& coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /// Lowest exponent with nonzero coefficient. Zero polynomial has none; callers must check.
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int e) const;
    const Rat& leading() const { return c_.back(); }
    const Rat& trailing() const { return c_.front(); }
    std::map<int, Rat> to_map() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Multiply by v^e.
    LaurentPoly shifted(int e) const;
    /// Substitution v -> v^{-1}.
    LaurentPoly bar() const;
    /// Exact value at v = v0; requires v0 != 0 when negative exponents are present.
    Rat eval(const Rat& v0) const;

    /// True polynomial part: *this shifted so that low() == 0. Zero stays zero.
    LaurentPoly poly_part() const { return is_zero() ? LaurentPoly{} : shifted(-low_); }

    /// Quotient/remainder for true polynomials (low() >= 0, divisor nonzero).
    static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);
    /// Monic gcd of the polynomial parts (v factors stripped first).
    static LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string(const std::string& var = "v") const;

  private:
    void trim();
    int low_ = 0;
    std::vector<Rat> c_;
};

}  // namespace qea
