#ifndef BLOCKALG_SCALAR_HPP
#define BLOCKALG_SCALAR_HPP

#include "blockalg/poly.hpp"

namespace blockalg {

/// Exact rational function num/den over a field context.
/// Canonical form: gcd(num,den) = 1, den monic in grlex order, and den = 1
/// when num = 0. Equality of canonical forms is structural equality.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(CtxPtr ctx)
      : num_(MPoly::zero(ctx)), den_(MPoly::constant(ctx, Rat(1))) {}
  Scalar(MPoly num, MPoly den);

  static Scalar from_rat(const CtxPtr& ctx, const Rat& r);
  static Scalar from_int(const CtxPtr& ctx, long n);
  static Scalar variable(const CtxPtr& ctx, const std::string& name);
  static Scalar theta(const CtxPtr& ctx);
  static Scalar from_poly(MPoly p);

  const CtxPtr& ctx() const { return num_.ctx(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar inv() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(long n) const { return *this + from_int(ctx(), n); }
  Scalar operator-(long n) const { return *this - from_int(ctx(), n); }
  Scalar operator*(long n) const { return *this * from_int(ctx(), n); }

  std::string to_string() const;

 private:
  MPoly num_, den_;
  void reduce();
};

/// Substitute variables by scalars. Unbound variables map to the variable of
/// the same name in the target context (target defaults to the source
/// context). Throws SingularSpecialization when the denominator vanishes.
Scalar specialize(const Scalar& x, const std::map<std::string, Scalar>& bind,
                  CtxPtr target = nullptr);

/// Coefficient of var^k, the scalar viewed as a polynomial in var
/// (x must be polynomial in var: den must not depend on it).
Scalar coeff_in_var(const Scalar& x, const std::string& var, std::uint32_t k);

}  // namespace blockalg

#endif
