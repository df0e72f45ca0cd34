#include "blockalg/poly.hpp"

#include <algorithm>

namespace blockalg {

MPoly MPoly::constant(CtxPtr ctx, const Rat& c) {
  return constant(ctx, ctx->an_from_rat(c));
}

MPoly MPoly::constant(CtxPtr ctx, AlgNum c) {
  MPoly p(ctx);
  if (!ctx->an_is_zero(c)) p.terms_[Monomial(ctx->nvars(), 0)] = std::move(c);
  return p;
}

MPoly MPoly::variable(CtxPtr ctx, const std::string& name) {
  std::size_t i = ctx->var_index(name);
  MPoly p(ctx);
  Monomial m(ctx->nvars(), 0);
  m[i] = 1;
  p.terms_[m] = ctx->an_one();
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](std::uint32_t e) { return e == 0; });
}

AlgNum MPoly::constant_value() const {
  if (terms_.empty()) return ctx_->an_zero();
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.begin()->second;
}

void MPoly::add_term(const Monomial& m, const AlgNum& c) {
  if (ctx_->an_is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second = ctx_->an_add(it->second, c);
    if (ctx_->an_is_zero(it->second)) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_[m] = ctx_->an_neg(c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  require_same_context(ctx_, o.ctx_);
  MPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  require_same_context(ctx_, o.ctx_);
  MPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, ctx_->an_neg(c));
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  require_same_context(ctx_, o.ctx_);
  MPoly r(ctx_);
  Monomial m(ctx_->nvars());
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ctx_->an_mul(ca, cb));
    }
  }
  return r;
}

MPoly MPoly::scaled(const AlgNum& c) const {
  MPoly r(ctx_);
  if (ctx_->an_is_zero(c)) return r;
  for (const auto& [m, cc] : terms_) r.terms_[m] = ctx_->an_mul(cc, c);
  return r;
}

MPoly MPoly::pow(std::uint32_t e) const {
  MPoly r = constant(ctx_, Rat(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = e > 1 ? base * base : base;
    e >>= 1;
  }
  return r;
}

std::uint64_t MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  std::uint64_t d = 0;
  for (auto e : terms_.begin()->first) d += e;  // grlex leader has max degree
  return d;
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

bool MPoly::depends_on(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] > 0) return true;
  return false;
}

const AlgNum& MPoly::leading_coeff() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

MPoly MPoly::coeff_of(std::size_t var, std::uint32_t k) const {
  MPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (m[var] != k) continue;
    Monomial mm = m;
    mm[var] = 0;
    r.terms_[mm] = c;
  }
  return r;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = ctx_->an_to_string(c);  // rationals bare, theta parenthesized
    bool neg = false;
    if (!cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? "-" : "+";
    }
    std::string vars;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ctx_->vars()[i];
      if (m[i] > 1) vars += "^" + std::to_string(m[i]);
    }
    if (vars.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += vars;
    } else {
      out += cs + "*" + vars;
    }
  }
  return out;
}

MPoly divexact(const MPoly& f, const MPoly& g) {
  if (g.is_zero()) throw DivisionByZero("exact division by zero polynomial");
  const CtxPtr& ctx = f.ctx();
  require_same_context(ctx, g.ctx());
  MPoly q(ctx);
  MPoly r = f;
  const auto& glt = *g.terms().begin();
  while (!r.is_zero()) {
    const auto& rlt = *r.terms().begin();
    Monomial mq(ctx->nvars());
    for (std::size_t i = 0; i < mq.size(); ++i) {
      if (rlt.first[i] < glt.first[i])
        throw Error("inexact polynomial division");
      mq[i] = rlt.first[i] - glt.first[i];
    }
    AlgNum cq = ctx->an_div(rlt.second, glt.second);
    MPoly t(ctx);
    t.add_term(mq, cq);
    q = q + t;
    r = r - t * g;
  }
  return q;
}

namespace {

// Recursive view of p in variable v and helpers for the primitive PRS.

MPoly content_in(const MPoly& p, std::size_t v);

// gcd normalized monic; dispatches on the set of occurring variables.
MPoly gcd_impl(const MPoly& f, const MPoly& g) {
  const CtxPtr& ctx = f.ctx();
  auto normalize = [&](const MPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(ctx->an_inv(p.leading_coeff()));
  };
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  if (f.is_constant() || g.is_constant())
    return MPoly::constant(ctx, Rat(1));
  // highest-index variable occurring in f or g
  std::size_t v = 0;
  bool found = false;
  for (std::size_t i = ctx->nvars(); i-- > 0;) {
    if (f.depends_on(i) || g.depends_on(i)) {
      v = i;
      found = true;
      break;
    }
  }
  if (!found) return MPoly::constant(ctx, Rat(1));

  MPoly cf = content_in(f, v);
  MPoly cg = content_in(g, v);
  MPoly c = gcd_impl(cf, cg);
  MPoly pf = divexact(f, cf);
  MPoly pg = divexact(g, cg);

  // primitive PRS in v
  MPoly r0 = pf, r1 = pg;
  if (r0.degree_in(v) < r1.degree_in(v)) std::swap(r0, r1);
  while (!r1.is_zero() && r1.degree_in(v) > 0) {
    // pseudo-remainder of r0 by r1 in v
    MPoly lead1 = r1.coeff_of(v, r1.degree_in(v));
    MPoly rem = r0;
    std::uint32_t d1 = r1.degree_in(v);
    while (!rem.is_zero() && rem.degree_in(v) >= d1) {
      std::uint32_t dr = rem.degree_in(v);
      MPoly lr = rem.coeff_of(v, dr);
      MPoly shift = MPoly::variable(ctx, ctx->vars()[v]).pow(dr - d1);
      rem = rem * lead1 - r1 * lr * shift;
      if (!rem.is_zero() && rem.degree_in(v) == dr && dr == d1) break;  // safety
    }
    if (!rem.is_zero()) rem = divexact(rem, content_in(rem, v));
    r0 = r1;
    r1 = rem;
  }
  if (!r1.is_zero()) return normalize(c);  // v-free nonzero remainder
  MPoly h = divexact(r0, content_in(r0, v));
  return normalize(c * h);
}

MPoly content_in(const MPoly& p, std::size_t v) {
  MPoly c(p.ctx());
  for (std::uint32_t k = 0; k <= p.degree_in(v); ++k) {
    MPoly ck = p.coeff_of(v, k);
    if (ck.is_zero()) continue;
    c = gcd_impl(c, ck);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

}  // namespace

MPoly poly_gcd(const MPoly& f, const MPoly& g) {
  require_same_context(f.ctx(), g.ctx());
  return gcd_impl(f, g);
}

}  // namespace blockalg
