#include "blockalg/context.hpp"

#include <algorithm>
#include <set>

namespace blockalg {

namespace {

// Dense polynomial over Q in one variable, lowest degree first.
using QPoly = std::vector<Rat>;

std::size_t qp_deg(const QPoly& p) {
  std::size_t n = p.size();
  while (n > 0 && p[n - 1] == 0) --n;
  return n == 0 ? 0 : n - 1;
}

void qp_trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool qp_is_zero(const QPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const Rat& c) { return c == 0; });
}

// p mod q, q nonzero; both trimmed.
QPoly qp_rem(QPoly p, const QPoly& q) {
  qp_trim(p);
  std::size_t dq = qp_deg(q);
  while (!qp_is_zero(p) && qp_deg(p) >= dq) {
    std::size_t dp = qp_deg(p);
    Rat f = p[dp] / q[dq];
    for (std::size_t i = 0; i <= dq; ++i) p[dp - dq + i] -= f * q[i];
    qp_trim(p);
    if (dp == 0) break;
  }
  return p;
}

std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  }
  return out;
}

// Integer-coefficient content-free image of a rational polynomial.
std::vector<Int> make_integral(const QPoly& p) {
  Int lcm = 1;
  for (const Rat& c : p) lcm = lcm * c.get_den() / gcd(lcm, Int(c.get_den()));
  std::vector<Int> out;
  Int content = 0;
  for (const Rat& c : p) {
    Rat v = c * lcm;
    out.push_back(v.get_num());
    content = gcd(content, out.back());
  }
  if (content > 1)
    for (Int& c : out) c /= content;
  return out;
}

bool has_rational_root(const std::vector<Int>& p) {
  std::size_t d = p.size() - 1;
  if (p[0] == 0) return true;  // root 0
  for (const Int& num : divisors(p[0])) {
    for (const Int& den : divisors(p[d])) {
      for (int sign : {1, -1}) {
        // evaluate p at sign*num/den exactly
        Rat x(sign * num, den);
        x.canonicalize();
        Rat acc = 0;
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rat(p[i]);
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

bool is_square(const Int& n, Int& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

// Irreducibility over Q for degree 2..4. Degree 2,3: no rational root.
// Degree 4: additionally no factorization into two rational quadratics,
// checked on the monic integer model y^4+c3 y^3+c2 y^2+c1 y+c0 obtained by
// y = lc*x.
bool is_irreducible(const QPoly& mp) {
  std::size_t d = qp_deg(mp);
  if (d < 2) return false;
  std::vector<Int> p = make_integral(mp);
  if (has_rational_root(p)) return false;
  if (d <= 3) return true;
  if (d > 4) throw Error("extension degree > 4 not supported");
  // monic integer model
  Int l = p[4];
  Int c3 = p[3], c2 = p[2] * l, c1 = p[1] * l * l, c0 = p[0] * l * l * l;
  if (c0 == 0) return false;
  for (const Int& qv0 : divisors(c0)) {
    for (int sgn : {1, -1}) {
      Int qv = sgn * qv0;
      if (qv == 0 || c0 % qv != 0) continue;
      Int sv = c0 / qv;
      // pv+rv = c3, pv*rv = c2-qv-sv, pv*sv+qv*rv = c1
      Int prod = c2 - qv - sv;
      Int disc = c3 * c3 - 4 * prod;
      Int root;
      if (!is_square(disc, root)) continue;
      if ((c3 + root) % 2 != 0) continue;
      Int pv = (c3 + root) / 2, rv = (c3 - root) / 2;
      if (pv * sv + qv * rv == c1 || rv * sv + qv * pv == c1) return false;
    }
  }
  return true;
}

}  // namespace

CtxPtr FieldContext::rationals(std::vector<std::string> vars) {
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->vars_ = std::move(vars);
  ctx->check_vars();
  return ctx;
}

CtxPtr FieldContext::extension(std::vector<std::string> vars,
                               std::string ext_name, std::vector<Rat> minpoly) {
  auto ctx = std::shared_ptr<FieldContext>(new FieldContext());
  ctx->vars_ = std::move(vars);
  ctx->ext_name_ = std::move(ext_name);
  qp_trim(minpoly);
  std::size_t d = qp_deg(minpoly);
  if (d < 2 || d > 4) throw Error("extension degree must be 2..4");
  if (minpoly[d] != 1) throw Error("minimal polynomial must be monic");
  if (!is_irreducible(minpoly))
    throw Error("minimal polynomial is reducible over Q");
  ctx->minpoly_ = std::move(minpoly);
  ctx->ext_degree_ = d;
  ctx->check_vars();
  if (ctx->ext_name_.empty()) throw Error("extension generator needs a name");
  if (ctx->has_var(ctx->ext_name_))
    throw Error("extension generator clashes with indeterminate " +
                ctx->ext_name_);
  return ctx;
}

void FieldContext::check_vars() {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].empty()) throw Error("empty indeterminate name");
    if (!seen.insert(vars_[i]).second)
      throw Error("duplicate indeterminate " + vars_[i]);
    var_index_[vars_[i]] = i;
  }
}

std::size_t FieldContext::var_index(const std::string& name) const {
  auto it = var_index_.find(name);
  if (it == var_index_.end()) throw Error("unknown indeterminate " + name);
  return it->second;
}

bool FieldContext::same_as(const FieldContext& o) const {
  return vars_ == o.vars_ && ext_name_ == o.ext_name_ && minpoly_ == o.minpoly_;
}

AlgNum FieldContext::an_one() const {
  AlgNum a = an_zero();
  a[0] = 1;
  return a;
}

AlgNum FieldContext::an_from_rat(const Rat& r) const {
  AlgNum a = an_zero();
  a[0] = r;
  return a;
}

AlgNum FieldContext::an_theta() const {
  if (!has_extension()) throw Error("context has no algebraic extension");
  AlgNum a = an_zero();
  a[1] = 1;
  return a;
}

bool FieldContext::an_is_zero(const AlgNum& a) const {
  return std::all_of(a.begin(), a.end(),
                     [](const Rat& c) { return c == 0; });
}

bool FieldContext::an_is_rational(const AlgNum& a) const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

AlgNum FieldContext::an_add(const AlgNum& a, const AlgNum& b) const {
  AlgNum r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

AlgNum FieldContext::an_sub(const AlgNum& a, const AlgNum& b) const {
  AlgNum r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

AlgNum FieldContext::an_neg(const AlgNum& a) const {
  AlgNum r = a;
  for (Rat& c : r) c = -c;
  return r;
}

AlgNum FieldContext::an_mul(const AlgNum& a, const AlgNum& b) const {
  std::size_t d = ext_degree_;
  if (d == 1) return {a[0] * b[0]};
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
  }
  // reduce modulo the monic minimal polynomial
  for (std::size_t k = prod.size(); k-- > d;) {
    if (prod[k] == 0) continue;
    Rat f = prod[k];
    prod[k] = 0;
    for (std::size_t i = 0; i < d; ++i) prod[k - d + i] -= f * minpoly_[i];
  }
  prod.resize(d);
  return prod;
}

AlgNum FieldContext::an_inv(const AlgNum& a) const {
  if (an_is_zero(a)) throw DivisionByZero("division by zero in base field");
  if (ext_degree_ == 1) return {Rat(1) / a[0]};
  // extended Euclid in Q[theta]: find u with u*a = 1 mod minpoly
  QPoly r0(minpoly_.begin(), minpoly_.end());
  QPoly r1(a.begin(), a.end());
  qp_trim(r1);
  QPoly s0 = {Rat(0)}, s1 = {Rat(1)};  // coefficients of a
  while (!qp_is_zero(r1) && qp_deg(r1) > 0) {
    // r0 = q*r1 + r2
    QPoly q(qp_deg(r0) - qp_deg(r1) + 1, Rat(0));
    QPoly rem = r0;
    std::size_t d1 = qp_deg(r1);
    while (!qp_is_zero(rem) && qp_deg(rem) >= d1) {
      std::size_t dr = qp_deg(rem);
      Rat f = rem[dr] / r1[d1];
      q[dr - d1] = f;
      for (std::size_t i = 0; i <= d1; ++i) rem[dr - d1 + i] -= f * r1[i];
      qp_trim(rem);
      if (dr == 0) break;
    }
    // s2 = s0 - q*s1
    QPoly qs(q.size() + s1.size() - 1, Rat(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    QPoly s2(std::max(s0.size(), qs.size()), Rat(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  if (qp_is_zero(r1))
    throw Error("minimal polynomial not coprime with operand");
  // r1 is a nonzero constant: s1*a = r1 mod minpoly
  Rat c = r1[0];
  AlgNum out = an_zero();
  for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i)
    out[i] = s1[i] / c;
  return out;
}

AlgNum FieldContext::an_div(const AlgNum& a, const AlgNum& b) const {
  return an_mul(a, an_inv(b));
}

std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

std::string FieldContext::an_to_string(const AlgNum& a) const {
  if (an_is_rational(a)) return rat_to_string(a[0]);
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rat c = a[i];
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
      first = false;
    } else {
      out += c < 0 ? "-" : "+";
      if (c < 0) c = -c;
    }
    if (i == 0) {
      out += rat_to_string(c);
    } else {
      if (c != 1) out += rat_to_string(c) + "*";
      out += ext_name_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  if (first) out = "0";
  return "(" + out + ")";
}

void require_same_context(const CtxPtr& a, const CtxPtr& b) {
  if (a == b) return;
  if (a && b && a->same_as(*b)) return;
  throw ContextMismatch("operands live in different field contexts");
}

}  // namespace blockalg
