#ifndef BLOCKALG_CONTEXT_HPP
#define BLOCKALG_CONTEXT_HPP

#include <gmpxx.h>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockalg {

using Rat = mpq_class;
using Int = mpz_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContextMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct SingularSpecialization : Error {
  std::string factor;
  explicit SingularSpecialization(const std::string& f)
      : Error("singular specialization: denominator factor vanishes: " + f),
        factor(f) {}
};
struct ParseError : Error {
  using Error::Error;
};

class FieldContext;
using CtxPtr = std::shared_ptr<const FieldContext>;

/// Element of the base field: Q, or Q[theta]/(m) with m monic irreducible.
/// Stored as coefficients c[0] + c[1]*theta + ... of length = extension degree
/// (length 1 over plain Q).
using AlgNum = std::vector<Rat>;

/// Immutable coefficient-field context: base field plus an ordered list of
/// indeterminate names. All polynomial and rational-function values carry a
/// pointer to their context; mixing contexts is an error.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
 public:
  /// Plain Q with the given indeterminates.
  static CtxPtr rationals(std::vector<std::string> vars);

  /// Q[ext_name]/(minpoly), minpoly monic with rational coefficients,
  /// degree 2..4, irreducible over Q (checked).
  static CtxPtr extension(std::vector<std::string> vars, std::string ext_name,
                          std::vector<Rat> minpoly);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  bool has_var(const std::string& name) const {
    return var_index_.count(name) != 0;
  }
  std::size_t var_index(const std::string& name) const;

  bool has_extension() const { return ext_degree_ > 1; }
  const std::string& ext_name() const { return ext_name_; }
  std::size_t ext_degree() const { return ext_degree_; }
  const std::vector<Rat>& minpoly() const { return minpoly_; }

  /// Structural equality: same base field and same variable list.
  bool same_as(const FieldContext& o) const;

  // -- base-field arithmetic ------------------------------------------------
  AlgNum an_zero() const { return AlgNum(ext_degree_, Rat(0)); }
  AlgNum an_one() const;
  AlgNum an_from_rat(const Rat& r) const;
  AlgNum an_theta() const;  // the adjoined generator (requires extension)
  bool an_is_zero(const AlgNum& a) const;
  bool an_is_rational(const AlgNum& a) const;  // no theta component
  AlgNum an_add(const AlgNum& a, const AlgNum& b) const;
  AlgNum an_sub(const AlgNum& a, const AlgNum& b) const;
  AlgNum an_neg(const AlgNum& a) const;
  AlgNum an_mul(const AlgNum& a, const AlgNum& b) const;
  AlgNum an_inv(const AlgNum& a) const;  // throws DivisionByZero on 0
  AlgNum an_div(const AlgNum& a, const AlgNum& b) const;
  std::string an_to_string(const AlgNum& a) const;

 private:
  FieldContext() = default;
  void check_vars() const;

  std::vector<std::string> vars_;
  std::map<std::string, std::size_t> var_index_;
  std::string ext_name_;
  std::vector<Rat> minpoly_;  // empty over Q
  std::size_t ext_degree_ = 1;
};

/// Throws unless a and b denote the same field context.
void require_same_context(const CtxPtr& a, const CtxPtr& b);

std::string rat_to_string(const Rat& r);

}  // namespace blockalg

#endif
