#ifndef BLOCKALG_ALGEBRA_HPP
#define BLOCKALG_ALGEBRA_HPP

#include <optional>
#include <utility>

#include "blockalg/scalar.hpp"

namespace blockalg {

/// Basis symbol of the graded algebra: a generator indexed by (alpha, i) with
/// i >= 0, or the central element.
struct BasisIndex {
  bool central = false;
  long alpha = 0;
  long i = 0;

  static BasisIndex gen(long alpha, long i) {
    if (i < 0) throw Error("generator needs i >= 0");
    return BasisIndex{false, alpha, i};
  }
  static BasisIndex c() { return BasisIndex{true, 0, 0}; }

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// The algebra is determined by the field context and the value of the
/// bracket parameter q: a plain indeterminate for generic identities, or any
/// specialized nonzero scalar (rational or algebraic).
class BlockAlgebra {
 public:
  BlockAlgebra(CtxPtr ctx, Scalar q_value);

  const CtxPtr& ctx() const { return ctx_; }
  const Scalar& q() const { return q_; }

 private:
  CtxPtr ctx_;
  Scalar q_;
};

/// Finite combination of generators and the central element, with scalar
/// coefficients. Zero coefficients are never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static AlgebraElement basis(const CtxPtr& ctx, BasisIndex b);
  static AlgebraElement gen(const CtxPtr& ctx, long alpha, long i) {
    return basis(ctx, BasisIndex::gen(alpha, i));
  }
  static AlgebraElement central(const CtxPtr& ctx) {
    return basis(ctx, BasisIndex::c());
  }

  const CtxPtr& ctx() const { return ctx_; }
  const std::map<BasisIndex, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const BasisIndex& b) const;

  void add_term(const BasisIndex& b, const Scalar& c);

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& c) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  /// All alpha-degrees present (the Z-gradation support).
  std::vector<long> degrees() const;

  std::string to_string() const;

 private:
  CtxPtr ctx_;
  std::map<BasisIndex, Scalar> terms_;
};

/// [x, y] by bilinear extension of
/// [L_{a,i}, L_{b,j}] = (b(i+q) - a(j+q)) L_{a+b,i+j}
///                      + delta_{a+b,0} delta_{i+j,0} (a^3-a)/12 c,
/// with c central.
AlgebraElement bracket(const BlockAlgebra& alg, const AlgebraElement& x,
                       const AlgebraElement& y);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero iff the Jacobi identity holds.
AlgebraElement jacobi_residual(const BlockAlgebra& alg, const AlgebraElement& x,
                               const AlgebraElement& y,
                               const AlgebraElement& z);

/// Virasoro generators L_alpha = q^{-1} L_{alpha,0} and kappa = q^{-2} c.
/// Throws when q is specialized to zero.
AlgebraElement vir_embed(const BlockAlgebra& alg, long alpha);
AlgebraElement vir_central(const BlockAlgebra& alg);

/// Linear map L_{a,i} -> k^{-1} L_{a,ki}, c -> k^{-2} c, a homomorphism into
/// the algebra with parameter k*q.
AlgebraElement scale_embed(const AlgebraElement& x, long k);
/// The target algebra of scale_embed for sources with parameter q().
BlockAlgebra scale_target(const BlockAlgebra& alg, long k);

/// Iterated ad: ad_{z2}^{k2-1} ad_{z1}^{k1} (z2) with z1 = L_{1-mu0,0},
/// z2 = L_{-mu0,0}, together with the closed-form coefficient
/// q^{k1+k2-1} prod_{i=1}^{k1} (-(i-1)mu0+i-2) prod_{j=1}^{k2-1} (-(k1+j-1)mu0+k1).
/// The element is supported on L_{alpha,0} with alpha = k1(1-mu0) - k2 mu0.
struct AdChainResult {
  AlgebraElement element;
  Scalar closed_form;
  long alpha;
};
AdChainResult ad_chain(const BlockAlgebra& alg, long mu0, long k1, long k2);

/// For mu0 <= -1 and alpha >= (1-mu0)^2, positive integers (k1, k2) with
/// alpha = k1(1-mu0) - k2 mu0.
std::pair<long, long> decompose_alpha(long mu0, long alpha);

/// Residual of the induction step rewriting x^alpha t^{q+s-1} through a
/// bracket with denominator r_{alpha,q}; zero when the step is valid.
/// Branches: generic (r = mu0(2q+s-1)+alpha(q+1)) and (s=3, q=-1) with
/// r = alpha. Throws when r vanishes under the algebra's q.
AlgebraElement induction_step_identity(const BlockAlgebra& alg, long mu0,
                                       long alpha, long s);

/// Differential operators x^alpha D^i of degree i >= 1 plus a central term.
class DiffOpElement {
 public:
  explicit DiffOpElement(CtxPtr ctx)
      : ctx_(std::move(ctx)), central_(Scalar(ctx_)) {}

  static DiffOpElement op(const CtxPtr& ctx, long alpha, long i);

  const CtxPtr& ctx() const { return ctx_; }
  const std::map<std::pair<long, long>, Scalar>& terms() const {
    return terms_;
  }
  const Scalar& central() const { return central_; }
  bool is_zero() const { return terms_.empty() && central_.is_zero(); }

  void add_term(long alpha, long i, const Scalar& c);
  void add_central(const Scalar& c) { central_ = central_ + c; }

  DiffOpElement operator+(const DiffOpElement& o) const;
  DiffOpElement operator-(const DiffOpElement& o) const;
  DiffOpElement scaled(const Scalar& c) const;
  bool operator==(const DiffOpElement& o) const {
    return terms_ == o.terms_ && central_ == o.central_;
  }

  Scalar coeff(long alpha, long i) const;
  std::string to_string() const;

 private:
  CtxPtr ctx_;
  std::map<std::pair<long, long>, Scalar> terms_;
  Scalar central_;
};

/// [x^a D^i, x^b D^j] = x^{a+b}((D+b)^i D^j - D^i (D+a)^j)
///   + delta_{a+b,0} (-1)^i i! j! binom(a+i, i+j+1) c,
/// with the generalized binomial evaluated exactly for any integer a.
DiffOpElement winf_bracket(const DiffOpElement& x, const DiffOpElement& y);

/// Difference between the coefficient of x^{a+b} D^{i+j-1} in
/// [x^a D^i, x^b D^j] and the structure constant (b*i - a*j) of the
/// degree-one-graded algebra under x^a D^{i+1} <-> L_{a,i}; zero always.
Scalar assoc_graded_check(const CtxPtr& ctx, long alpha, long beta, long i,
                          long j);

/// Generalized binomial binom(n, k) for integer n (possibly negative) and
/// k >= 0, as an exact rational.
Rat binom_general(long n, long k);

}  // namespace blockalg

#endif
