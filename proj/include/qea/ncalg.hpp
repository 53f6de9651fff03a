#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qea/scalar.hpp"

namespace qea {

/// Root-system data of the algebra: Cartan matrix a_ij, symmetrizers d_i
/// (so q_i = q^{d_i}), inverse Cartan matrix, and the shared scalar field.
struct AlgebraSpec {
    enum class Family { AN, G2 };
    Family family = Family::AN;
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> cartan_inv;
    ScalarSpecPtr scalar;
    std::string name;

    /// Sum_i d_i a_{ij} mu_i, the q-exponent picked up by t^mu crossing e_j.
    Rat cross(const std::vector<Rat>& mu, int j) const;
    /// q_j = q^{d_j} as a Scalar power helper.
    Scalar qi_pow(int j, const Rat& exponent) const;
    /// omega_j = q_j - q_j^{-1}.
    Scalar omega(int j) const;

    bool operator==(const AlgebraSpec& o) const;
};

using AlgebraSpecPtr = std::shared_ptr<const AlgebraSpec>;

AlgebraSpecPtr make_an(int N);
AlgebraSpecPtr make_g2();

/// One generator letter e_i or f_i (0-based index).
struct Gen {
    bool f = false;
    int idx = 0;
    bool operator==(const Gen& o) const { return f == o.f && idx == o.idx; }
    bool operator<(const Gen& o) const { return f != o.f ? f < o.f : idx < o.idx; }
};

using Word = std::vector<Gen>;

/// Word times t-monomial; the commuting t part is always kept on the right.
struct Mono {
    Word word;
    std::vector<Rat> texp;

    bool operator==(const Mono& o) const { return word == o.word && texp == o.texp; }
    bool operator<(const Mono& o) const;
};

struct NcTerm {
    Scalar coeff;
    Mono mono;
};

/// Finite sum of terms in canonical order (merged, zero-free).
class NcExpr {
  public:
    NcExpr() = default;
    explicit NcExpr(AlgebraSpecPtr spec) : spec_(std::move(spec)) {}
    NcExpr(AlgebraSpecPtr spec, std::vector<NcTerm> terms);

    const AlgebraSpecPtr& spec() const { return spec_; }
    const std::vector<NcTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    NcExpr operator-() const;
    NcExpr operator+(const NcExpr& o) const;
    NcExpr operator-(const NcExpr& o) const;
    NcExpr operator*(const NcExpr& o) const;
    NcExpr operator*(const Scalar& c) const;
    bool operator==(const NcExpr& o) const;
    bool operator!=(const NcExpr& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    AlgebraSpecPtr spec_;
    std::vector<NcTerm> terms_;
};

NcExpr nc_one(const AlgebraSpecPtr& spec);
NcExpr nc_gen(const AlgebraSpecPtr& spec, Gen g);
NcExpr nc_word(const AlgebraSpecPtr& spec, const Word& w);
NcExpr nc_t_monomial(const AlgebraSpecPtr& spec, const std::vector<Rat>& texp);
NcExpr nc_term(const AlgebraSpecPtr& spec, const Scalar& c, const Word& w, const std::vector<Rat>& texp);

/// Product of two monomials: words concatenate, t-exponents add, and the left
/// t-monomial crossing the right word contributes a q-power to the coefficient.
Scalar mono_mul(const AlgebraSpecPtr& spec, const Mono& x, const Mono& y, Mono& out);

/// Sum of (coeff, left mono, right mono); the bilinear canonical form.
struct TensorTerm {
    Scalar coeff;
    Mono left, right;
};

class TensorExpr {
  public:
    TensorExpr() = default;
    explicit TensorExpr(AlgebraSpecPtr spec) : spec_(std::move(spec)) {}
    TensorExpr(AlgebraSpecPtr spec, std::vector<TensorTerm> terms);

    const AlgebraSpecPtr& spec() const { return spec_; }
    const std::vector<TensorTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TensorExpr operator+(const TensorExpr& o) const;
    TensorExpr operator-(const TensorExpr& o) const;
    TensorExpr operator*(const TensorExpr& o) const;
    bool operator==(const TensorExpr& o) const;
    bool operator!=(const TensorExpr& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    AlgebraSpecPtr spec_;
    std::vector<TensorTerm> terms_;
};

/// Hopf structure: Delta(t) = t (x) t, Delta(e) = e (x) 1 + t (x) e,
/// Delta(f) = f (x) t^{-1} + 1 (x) f, extended as an algebra map.
TensorExpr coproduct(const NcExpr& x);

/// epsilon: 1 on pure t-monomials, 0 on terms with letters.
Scalar counit(const NcExpr& x);

/// S(t) = t^{-1}, S(e) = -t^{-1} e, S(f) = -f t; anti-homomorphism.
/// S^{-1}(e) = -e t^{-1}, S^{-1}(f) = -t f.
NcExpr antipode(const NcExpr& x, bool inverse = false);

/// Multiset of letters as simple-root coordinates. Word must be pure e or pure f.
std::vector<int> weight_of(const Word& w);

/// Common letter weight of a graded expression (throws if mixed weights or kinds).
std::vector<int> expr_weight(const NcExpr& x);

/// q-Serre sum sum_n (-1)^n [1-a_ij over n]_{q_i} x_i^{1-a_ij-n} x_j x_i^n, i != j.
NcExpr serre_element(const AlgebraSpecPtr& spec, int i, int j, bool f_kind);

}  // namespace qea
