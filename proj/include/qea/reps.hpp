#pragma once

#include <functional>

#include "qea/ncalg.hpp"

namespace qea {

/// Sparse square matrix over the scalar field; rows hold sorted (col, value).
class SpMat {
  public:
    SpMat() = default;
    SpMat(int n, ScalarSpecPtr spec) : n_(n), spec_(std::move(spec)), rows_(n) {}
    static SpMat identity(int n, const ScalarSpecPtr& spec);

    int dim() const { return n_; }
    const ScalarSpecPtr& scalar_spec() const { return spec_; }
    const std::vector<std::pair<int, Scalar>>& row(int r) const { return rows_[r]; }
    bool is_zero() const;
    int nnz() const;

    /// Value at (r, c); zero Scalar if absent.
    Scalar at(int r, int c) const;
    /// Sets (r, c); drops explicit zeros.
    void set(int r, int c, const Scalar& v);
    void add_at(int r, int c, const Scalar& v);

    SpMat operator+(const SpMat& o) const;
    SpMat operator-(const SpMat& o) const;
    SpMat operator*(const SpMat& o) const;
    SpMat operator*(const Scalar& c) const;
    bool operator==(const SpMat& o) const;
    /// Scale column c by s(c); realizes a right diagonal factor.
    SpMat scale_cols(const std::function<Scalar(int)>& s) const;

    std::string to_string() const;

  private:
    int n_ = 0;
    ScalarSpecPtr spec_;
    std::vector<std::vector<std::pair<int, Scalar>>> rows_;
};

/// Matrix realization: e/f generator matrices plus diagonal t-weights
/// (t_j acts on basis a as q_j^{t_weights[j][a]}).
struct Representation {
    AlgebraSpecPtr spec;
    int dim = 0;
    std::vector<SpMat> e_mats, f_mats;
    std::vector<std::vector<Rat>> t_weights;
    std::string label;

    /// Weight vector of one basis state: mu[j] = t_weights[j][a].
    std::vector<Rat> weight(int a) const;
    /// Diagonal matrix of prod_j t_j^{r_j}; throws when a q-power is not representable.
    SpMat t_diag(const std::vector<Rat>& texp) const;
    Scalar t_eigenvalue(const std::vector<Rat>& texp, int basis) const;
};

/// dim = N+1; t per the weight string, D(e_j) unit at (j, j+1), D(f_j) at (j+1, j).
Representation minimal_rep_an(int N);
/// dim = 7; the two [2]^{1/2} entries are the adjoined square root s.
Representation minimal_rep_g2();

/// Homomorphic evaluation of an expression as a matrix.
SpMat evaluate_expr(const NcExpr& x, const Representation& rep);

/// Generators act through the coproduct; weights add.
Representation tensor_rep(const Representation& r1, const Representation& r2);

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string residual;  // empty when passing
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool pass = true;
    void add(const std::string& name, bool ok, const std::string& residual = "");
    std::string summary() const;
};

/// Every defining relation family, evaluated as exact matrix identities.
CheckReport check_relations(const Representation& rep);

/// m(S (x) id)Delta(x) = eps(x) I and the id (x) S variant, on all generators.
CheckReport check_hopf(const Representation& rep);

}  // namespace qea
