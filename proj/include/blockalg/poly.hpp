#ifndef BLOCKALG_POLY_HPP
#define BLOCKALG_POLY_HPP

#include <cstdint>
#include <map>

#include "blockalg/context.hpp"

namespace blockalg {

/// Exponent vector, one entry per context indeterminate.
using Monomial = std::vector<std::uint32_t>;

/// Graded-lexicographic order, larger first (so map::begin() is the leading
/// term).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse multivariate polynomial with base-field coefficients.
/// Invariant: no zero coefficients stored.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static MPoly zero(CtxPtr ctx) { return MPoly(std::move(ctx)); }
  static MPoly constant(CtxPtr ctx, const Rat& c);
  static MPoly constant(CtxPtr ctx, AlgNum c);
  static MPoly variable(CtxPtr ctx, const std::string& name);

  const CtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term as a base-field element (poly must be constant).
  AlgNum constant_value() const;

  const std::map<Monomial, AlgNum, GrlexGreater>& terms() const {
    return terms_;
  }

  void add_term(const Monomial& m, const AlgNum& c);

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly scaled(const AlgNum& c) const;
  MPoly pow(std::uint32_t e) const;

  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  /// Leading coefficient in grlex order (poly must be nonzero).
  const AlgNum& leading_coeff() const;

  /// Coefficient (as a polynomial in the other variables) of var^k.
  MPoly coeff_of(std::size_t var, std::uint32_t k) const;

  std::string to_string() const;

 private:
  CtxPtr ctx_;
  std::map<Monomial, AlgNum, GrlexGreater> terms_;
};

/// Exact quotient f/g; throws Error when g does not divide f.
MPoly divexact(const MPoly& f, const MPoly& g);

/// Monic gcd (grlex-leading coefficient 1); gcd(0,0) = 0.
MPoly poly_gcd(const MPoly& f, const MPoly& g);

}  // namespace blockalg

#endif
