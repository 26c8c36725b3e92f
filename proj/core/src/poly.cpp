#include "elemgs/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "elemgs/errors.hpp"

namespace elemgs {

Poly::Poly(FieldRef field, unsigned nvars) : field_(std::move(field)), nvars_(nvars) {
  if (nvars_ > kMaxVars) throw InputError("at most 6 polynomial variables are supported");
}

Poly Poly::constant(FieldRef field, unsigned nvars, Elem c) {
  Poly r(std::move(field), nvars);
  if (c != 0) r.terms_.push_back({0, c});
  return r;
}

Poly Poly::variable(FieldRef field, unsigned nvars, unsigned index) {
  if (index >= nvars) throw InputError("variable index out of range");
  std::vector<unsigned> e(nvars, 0);
  e[index] = 1;
  return monomial(std::move(field), nvars, e, 1);
}

Poly Poly::monomial(FieldRef field, unsigned nvars, std::span<const unsigned> exps, Elem c) {
  Poly r(std::move(field), nvars);
  if (c != 0) r.terms_.push_back({r.pack(exps), c});
  return r;
}

PackedMonomial Poly::pack(std::span<const unsigned> exps) const {
  if (exps.size() != nvars_) throw InputError("exponent vector has wrong length");
  PackedMonomial m = 0;
  for (unsigned v = 0; v < nvars_; ++v) {
    if (exps[v] > kMaxExponent) throw InputError("exponent overflow in packed monomial");
    m |= PackedMonomial(exps[v]) << shift(v);
  }
  return m;
}

unsigned Poly::degree_in(unsigned var) const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, var));
  return d;
}

unsigned Poly::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (unsigned v = 0; v < nvars_; ++v) s += exponent(m, v);
    d = std::max(d, s);
  }
  return d;
}

void Poly::check_compatible(const Poly& o) const {
  if (nvars_ != o.nvars_) throw InputError("polynomials over different variable sets");
  if (field_ && o.field_ && !same_field(field_, o.field_)) throw InputError("polynomials over different fields");
}

Poly Poly::from_sorted(FieldRef field, unsigned nvars, std::vector<Term> terms) {
  Poly r(std::move(field), nvars);
  r.terms_ = std::move(terms);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  const FieldRef& f = field_ ? field_ : o.field_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Elem c = f->add(terms_[i].second, o.terms_[j].second);
      if (c != 0) out.push_back({terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  return from_sorted(f, nvars_, std::move(out));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = field_->neg(t.second);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return Poly(field_ ? field_ : o.field_, nvars_);
  for (unsigned v = 0; v < nvars_; ++v)
    if (degree_in(v) + o.degree_in(v) > kMaxExponent) throw InputError("exponent overflow in product");
  const FiniteField& f = *field_;
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) prod.push_back({ma + mb, f.mul(ca, cb)});
  std::sort(prod.begin(), prod.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(prod.size());
  for (const auto& t : prod) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second = f.add(out.back().second, t.second);
      if (out.back().second == 0) out.pop_back();
    } else {
      out.push_back(t);
    }
  }
  return from_sorted(field_, nvars_, std::move(out));
}

Poly Poly::scaled(Elem c) const {
  if (c == 0) return Poly(field_, nvars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.second = field_->mul(t.second, c);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading_coefficient()));
}

Elem Poly::evaluate(std::span<const Elem> point, const FiniteField& target, std::span<const Elem> embed) const {
  if (point.size() != nvars_) throw InputError("evaluation point has wrong dimension");
  Elem acc = 0;
  for (const auto& [m, c] : terms_) {
    Elem v = embed[c];
    for (unsigned var = 0; var < nvars_; ++var) {
      unsigned e = exponent(m, var);
      if (e) v = target.mul(v, target.pow(point[var], e));
    }
    acc = target.add(acc, v);
  }
  return acc;
}

std::string Poly::to_string(const std::string& var_prefix) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool any = false;
    std::ostringstream mono;
    for (unsigned v = 0; v < nvars_; ++v) {
      unsigned e = exponent(m, v);
      if (!e) continue;
      if (any) mono << "*";
      any = true;
      mono << var_prefix << (v + 1);
      if (e > 1) mono << "^" << e;
    }
    std::string coeff;
    if (field_->degree() == 1) {
      coeff = std::to_string(c);
    } else {
      auto cs = field_->coefficients(c);
      coeff = "(";
      for (std::size_t i = 0; i < cs.size(); ++i) coeff += (i ? "," : "") + std::to_string(cs[i]);
      coeff += ")";
    }
    if (!any) {
      os << coeff;
    } else if (c == 1) {
      os << mono.str();
    } else {
      os << coeff << "*" << mono.str();
    }
  }
  return os.str();
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  if (b.is_zero()) throw InputError("polynomial division by zero");
  const FiniteField& f = *b.field_;
  Poly q(b.field_, b.nvars_);
  Poly r = a;
  const auto [mb, cb] = b.terms_.front();
  Elem cb_inv = f.inv(cb);
  std::vector<Term> qterms;
  while (!r.is_zero()) {
    const auto [mr, cr] = r.terms_.front();
    for (unsigned v = 0; v < b.nvars_; ++v)
      if (r.exponent(mr, v) < b.exponent(mb, v)) throw ConsistencyError("inexact polynomial division");
    Term t{mr - mb, f.mul(cr, cb_inv)};
    qterms.push_back(t);
    r = r - from_sorted(b.field_, b.nvars_, {t}) * b;
  }
  return from_sorted(b.field_, b.nvars_, std::move(qterms));
}

// Recursive gcd. The polynomial is viewed as univariate in its first live
// variable with coefficients in the remaining variables.
class PolyOps {
 public:
  static std::map<unsigned, Poly> coefficients_in(const Poly& a, unsigned var) {
    std::map<unsigned, Poly> out;
    PackedMonomial mask = PackedMonomial(Poly::kMaxExponent) << a.shift(var);
    std::map<unsigned, std::vector<Poly::Term>> buckets;
    for (const auto& [m, c] : a.terms_) buckets[a.exponent(m, var)].push_back({m & ~mask, c});
    for (auto& [d, ts] : buckets) out.emplace(d, Poly::from_sorted(a.field_, a.nvars_, std::move(ts)));
    return out;
  }

  static Poly times_var_power(const Poly& a, unsigned var, unsigned e) {
    if (e == 0) return a;
    std::vector<Poly::Term> ts = a.terms_;
    for (auto& t : ts) {
      if (a.exponent(t.first, var) + e > Poly::kMaxExponent) throw InputError("exponent overflow");
      t.first += PackedMonomial(e) << a.shift(var);
    }
    return Poly::from_sorted(a.field_, a.nvars_, std::move(ts));
  }

  static Poly leading_coeff_in(const Poly& a, unsigned var) {
    auto cs = coefficients_in(a, var);
    return cs.rbegin()->second;
  }

  static Poly content_in(const Poly& a, unsigned var) {
    Poly g(a.field_, a.nvars_);
    for (const auto& [d, c] : coefficients_in(a, var)) {
      g = gcd(g, c);
      if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
  }

  static Poly primitive_part(const Poly& a, unsigned var) {
    if (a.is_zero()) return a;
    return Poly::exact_div(a, content_in(a, var));
  }

  static Poly pseudo_remainder(Poly a, const Poly& b, unsigned var) {
    unsigned db = b.degree_in(var);
    Poly lb = leading_coeff_in(b, var);
    while (!a.is_zero() && a.degree_in(var) >= db) {
      unsigned da = a.degree_in(var);
      Poly la = leading_coeff_in(a, var);
      a = lb * a - times_var_power(la * b, var, da - db);
    }
    return a;
  }
};

Poly gcd(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const FieldRef& f = a.field_;
  unsigned nv = a.nvars_;
  int var = -1;
  for (unsigned v = 0; v < nv && var < 0; ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) var = int(v);
  if (var < 0) return Poly::constant(f, nv, 1);
  unsigned v = unsigned(var);
  if (a.degree_in(v) == 0) return gcd(a, PolyOps::content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(PolyOps::content_in(a, v), b);
  Poly ca = PolyOps::content_in(a, v), cb = PolyOps::content_in(b, v);
  Poly gc = gcd(ca, cb);
  Poly pa = Poly::exact_div(a, ca), pb = Poly::exact_div(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree_in(v) == 0) {
      pa = Poly::constant(f, nv, 1);
      break;
    }
    Poly r = PolyOps::pseudo_remainder(pa, pb, v);
    pa = pb;
    pb = r.is_zero() ? r : PolyOps::primitive_part(r, v);
  }
  return (PolyOps::primitive_part(pa, v) * gc).monic();
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)) {
  den_ = Poly::constant(num_.field(), num_.nvars(), 1);
  normalize();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InputError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.field(), den_.nvars(), 1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = Poly::exact_div(num_, g);
    den_ = Poly::exact_div(den_, g);
  }
  Elem c = den_.field()->inv(den_.leading_coefficient());
  num_ = num_.scaled(c);
  den_ = den_.scaled(c);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}
RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::inverse() const {
  if (is_zero()) throw InputError("inverse of zero rational function");
  return RatFunc(den_, num_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace elemgs
