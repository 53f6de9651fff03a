#pragma once

#include "qea/laurent.hpp"

namespace qea {

/// Rational function num/den in v over the rationals, kept in canonical form:
/// den is a true polynomial (lowest exponent 0) with leading coefficient 1 and
/// gcd(num poly part, den) = 1. Equality is therefore structural.
class RatFunc {
  public:
    RatFunc() : den_(Rat(1)) {}
    explicit RatFunc(const Rat& constant) : num_(constant), den_(Rat(1)) {}
    explicit RatFunc(const LaurentPoly& num) : num_(num), den_(Rat(1)) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the denominator is 1 (a Laurent polynomial value).
    bool is_laurent() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }
    /// Exact evaluation; throws on pole (den(v0) = 0) and on v0 = 0 with negative exponents.
    Rat eval(const Rat& v0) const;

    /// Combined degree size, used for pivot selection in exact elimination.
    int degree_size() const;

    std::string to_string(const std::string& var = "v") const;

  private:
    LaurentPoly num_, den_;
};

}  // namespace qea
