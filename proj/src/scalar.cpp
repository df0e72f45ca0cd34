#include "blockalg/scalar.hpp"

namespace blockalg {

Scalar::Scalar(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_context(num_.ctx(), den_.ctx());
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  reduce();
}

Scalar Scalar::from_rat(const CtxPtr& ctx, const Rat& r) {
  Scalar s(ctx);
  s.num_ = MPoly::constant(ctx, r);
  return s;
}

Scalar Scalar::from_int(const CtxPtr& ctx, long n) {
  return from_rat(ctx, Rat(n));
}

Scalar Scalar::variable(const CtxPtr& ctx, const std::string& name) {
  Scalar s(ctx);
  s.num_ = MPoly::variable(ctx, name);
  return s;
}

Scalar Scalar::theta(const CtxPtr& ctx) {
  Scalar s(ctx);
  s.num_ = MPoly::constant(ctx, ctx->an_theta());
  return s;
}

Scalar Scalar::from_poly(MPoly p) {
  Scalar s(p.ctx());
  s.num_ = std::move(p);
  return s;
}

bool Scalar::is_one() const {
  return den_.is_constant() && !num_.is_zero() && num_.is_constant() &&
         ctx()->an_is_zero(ctx()->an_sub(num_.constant_value(), ctx()->an_one()));
}

bool Scalar::is_polynomial() const {
  return den_.is_constant();
}

void Scalar::reduce() {
  const CtxPtr& c = num_.ctx();
  if (num_.is_zero()) {
    den_ = MPoly::constant(c, Rat(1));
    return;
  }
  MPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  AlgNum lc = den_.leading_coeff();
  if (!c->an_is_zero(c->an_sub(lc, c->an_one()))) {
    AlgNum ilc = c->an_inv(lc);
    num_ = num_.scaled(ilc);
    den_ = den_.scaled(ilc);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_context(ctx(), o.ctx());
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_context(ctx(), o.ctx());
  if (den_ == o.den_) return Scalar(num_ - o.num_, den_);
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_context(ctx(), o.ctx());
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_context(ctx(), o.ctx());
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Scalar(den_, num_);
}

bool Scalar::operator==(const Scalar& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::string Scalar::to_string() const {
  if (den_.is_constant()) {
    // den is monic constant, hence exactly 1
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

Scalar eval_poly(const MPoly& p, const std::vector<Scalar>& images,
                 const CtxPtr& target) {
  Scalar acc(target);
  const CtxPtr& src = p.ctx();
  for (const auto& [m, c] : p.terms()) {
    Scalar term(target);
    if (src->an_is_rational(c)) {
      term = Scalar::from_rat(target, c[0]);
    } else {
      if (!target->has_extension() || target->minpoly() != src->minpoly())
        throw ContextMismatch(
            "coefficient uses an algebraic extension absent from target");
      Scalar th = Scalar::theta(target);
      term = Scalar::from_rat(target, c[0]);
      Scalar tp = Scalar::from_rat(target, Rat(1));
      for (std::size_t i = 1; i < c.size(); ++i) {
        tp = tp * th;
        if (c[i] != 0) term = term + Scalar::from_rat(target, c[i]) * tp;
      }
    }
    for (std::size_t v = 0; v < m.size(); ++v) {
      for (std::uint32_t e = 0; e < m[v]; ++e) term = term * images[v];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

Scalar specialize(const Scalar& x, const std::map<std::string, Scalar>& bind,
                  CtxPtr target) {
  const CtxPtr& src = x.ctx();
  if (!target) {
    if (!bind.empty())
      target = bind.begin()->second.ctx();
    else
      target = src;
  }
  for (const auto& [name, val] : bind) {
    if (!src->has_var(name)) throw Error("binding for unknown variable " + name);
    require_same_context(val.ctx(), target);
  }
  std::vector<Scalar> images;
  images.reserve(src->nvars());
  for (const std::string& v : src->vars()) {
    auto it = bind.find(v);
    if (it != bind.end())
      images.push_back(it->second);
    else
      images.push_back(Scalar::variable(target, v));
  }
  Scalar den = eval_poly(x.den(), images, target);
  if (den.is_zero()) throw SingularSpecialization(x.den().to_string());
  Scalar num = eval_poly(x.num(), images, target);
  return num / den;
}

Scalar coeff_in_var(const Scalar& x, const std::string& var, std::uint32_t k) {
  const CtxPtr& c = x.ctx();
  std::size_t v = c->var_index(var);
  if (x.den().depends_on(v))
    throw Error("coeff_in_var: denominator depends on " + var);
  return Scalar(x.num().coeff_of(v, k), x.den());
}

}  // namespace blockalg
