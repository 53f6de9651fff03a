#pragma once

#include <memory>
#include <optional>

#include "qea/ratfunc.hpp"

namespace qea {

/// Ground field description: q = v^L for a fixed root order L, optionally
/// extended by one square root s with s^2 = sqrt_adjoined (a Laurent
/// polynomial in v). Scalars built under different specs never mix.
struct ScalarSpec {
    int root_order = 1;
    std::optional<LaurentPoly> sqrt_adjoined;

    bool operator==(const ScalarSpec& o) const {
        return root_order == o.root_order && sqrt_adjoined == o.sqrt_adjoined;
    }
};

using ScalarSpecPtr = std::shared_ptr<const ScalarSpec>;

ScalarSpecPtr make_scalar_spec(int root_order);
ScalarSpecPtr make_scalar_spec(int root_order, const LaurentPoly& sqrt_adjoined);

/// Element of Q(sqrt(disc)): p + r*sqrt(disc). Exact point values of Scalars.
struct QuadNum {
    Rat p{0}, r{0}, disc{0};

    bool is_zero() const { return p == 0 && r == 0; }
    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator*(const QuadNum& o) const;
    bool operator==(const QuadNum& o) const;
    std::string to_string() const;
};

/// Field element a + b*s over Q(v), b = 0 when no square root is adjoined.
/// All arithmetic keeps canonical form, so operator== is exact equality.
class Scalar {
  public:
    Scalar() = default;  // unattached zero; usable only after assignment
    static Scalar zero(const ScalarSpecPtr& spec);
    static Scalar one(const ScalarSpecPtr& spec);
    static Scalar of(const ScalarSpecPtr& spec, const Rat& c);
    static Scalar of(const ScalarSpecPtr& spec, const RatFunc& a);
    static Scalar of(const ScalarSpecPtr& spec, const RatFunc& a, const RatFunc& b);
    /// v^e.
    static Scalar v_pow(const ScalarSpecPtr& spec, int e);
    /// q^x = v^{L x}; requires L*x integral.
    static Scalar q_pow(const ScalarSpecPtr& spec, const Rat& x);
    /// The adjoined square root s.
    static Scalar sqrt_sym(const ScalarSpecPtr& spec);

    const ScalarSpecPtr& spec() const { return spec_; }
    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    /// (a + b s)^{-1} = (a - b s) / (a^2 - b^2 s^2); throws on zero.
    Scalar inv() const;
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Coefficient involution v -> v^{-1}; s is fixed.
    Scalar bar() const;
    /// Exact evaluation at v = v0 as an element of Q(sqrt(disc)), disc = s^2(v0).
    QuadNum eval_at(const Rat& v0) const;

    int degree_size() const { return a_.degree_size() + b_.degree_size(); }
    std::string to_string() const;

  private:
    Scalar(ScalarSpecPtr spec, RatFunc a, RatFunc b);
    void require_spec(const Scalar& o) const;
    ScalarSpecPtr spec_;
    RatFunc a_, b_;
};

/// q-number [m] in base q^d: (q^{dm} - q^{-dm})/(q^d - q^{-d}). Requires L*d integral.
Scalar qnum(const ScalarSpecPtr& spec, long m, const Rat& d);
/// q-binomial [n over k] in base q^d; always a Laurent polynomial.
Scalar qbinom(const ScalarSpecPtr& spec, long n, long k, const Rat& d);

}  // namespace qea
