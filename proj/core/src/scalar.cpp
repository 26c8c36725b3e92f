#include "elemgs/scalar.hpp"

#include <sstream>

#include "elemgs/errors.hpp"

namespace elemgs {

std::string FieldSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::prime: os << "F_" << p; break;
    case Kind::ext: os << "F_" << p << "^" << (poly.size() - 1); break;
    case Kind::rational:
      os << "F_" << p;
      if (poly.size() > 2) os << "^" << (poly.size() - 1);
      os << "(t1..t" << vars << ")";
      break;
  }
  return os.str();
}

FieldSpec spec_of(const FiniteField& f) {
  FieldSpec s;
  s.kind = f.is_prime_field() ? FieldSpec::Kind::prime : FieldSpec::Kind::ext;
  s.p = f.characteristic();
  s.poly = f.modulus();
  return s;
}

FieldRef make_finite_field(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::prime: return FiniteField::prime(spec.p);
    case FieldSpec::Kind::ext: return FiniteField::extension(spec.p, spec.poly);
    case FieldSpec::Kind::rational: break;
  }
  throw InputError("a finite field was required, got " + spec.describe());
}

RationalField::RationalField(FieldRef base, unsigned vars) : base_(std::move(base)), vars_(vars) {
  if (vars_ == 0 || vars_ > Poly::kMaxVars) throw InputError("rational function field needs 1..6 variables");
}

FieldSpec RationalField::spec() const {
  FieldSpec s = spec_of(*base_);
  s.kind = FieldSpec::Kind::rational;
  s.vars = vars_;
  return s;
}

RatFunc RationalField::variable(unsigned i) const { return RatFunc(Poly::variable(base_, vars_, i)); }
RatFunc RationalField::constant(Elem c) const { return RatFunc(Poly::constant(base_, vars_, c)); }

Scalar::Scalar(FieldRef field, Elem value) : v_(Finite{std::move(field), value}) {
  const auto& f = std::get<Finite>(v_).field;
  if (!f) throw InputError("scalar without a field");
  if (!f->contains(value)) throw InputError("scalar code out of range for " + f->name());
}

Scalar::Scalar(RationalFieldRef field, RatFunc value) : v_(Rational{std::move(field), std::move(value)}) {
  const auto& r = std::get<Rational>(v_);
  if (!r.field) throw InputError("scalar without a field");
  if (r.value.num().nvars() != r.field->vars()) throw InputError("rational function has wrong variable count");
}

FieldSpec Scalar::spec() const {
  if (auto* f = std::get_if<Finite>(&v_)) return spec_of(*f->field);
  return std::get<Rational>(v_).field->spec();
}

bool Scalar::is_zero() const noexcept {
  if (auto* f = std::get_if<Finite>(&v_)) return f->value == 0;
  return std::get<Rational>(v_).value.is_zero();
}

const FieldRef& Scalar::finite_field() const {
  if (auto* f = std::get_if<Finite>(&v_)) return f->field;
  throw InputError("scalar is not a finite-field element");
}
Elem Scalar::finite_value() const {
  if (auto* f = std::get_if<Finite>(&v_)) return f->value;
  throw InputError("scalar is not a finite-field element");
}
const RationalFieldRef& Scalar::rational_field() const {
  if (auto* r = std::get_if<Rational>(&v_)) return r->field;
  throw InputError("scalar is not a rational function");
}
const RatFunc& Scalar::rational_value() const {
  if (auto* r = std::get_if<Rational>(&v_)) return r->value;
  throw InputError("scalar is not a rational function");
}

bool Scalar::same_field(const Scalar& o) const noexcept {
  if (v_.index() != o.v_.index()) return false;
  if (auto* f = std::get_if<Finite>(&v_)) return elemgs::same_field(f->field, std::get<Finite>(o.v_).field);
  return std::get<Rational>(v_).field->same_as(*std::get<Rational>(o.v_).field);
}

void Scalar::require_same(const Scalar& o) const {
  if (!same_field(o)) throw InputError("mixed-field arithmetic: " + spec().describe() + " vs " + o.spec().describe());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  if (auto* f = std::get_if<Finite>(&v_)) return Scalar(f->field, f->field->add(f->value, o.finite_value()));
  const auto& r = std::get<Rational>(v_);
  return Scalar(r.field, r.value + o.rational_value());
}

Scalar Scalar::operator-() const {
  if (auto* f = std::get_if<Finite>(&v_)) return Scalar(f->field, f->field->neg(f->value));
  const auto& r = std::get<Rational>(v_);
  return Scalar(r.field, -r.value);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  if (auto* f = std::get_if<Finite>(&v_)) return Scalar(f->field, f->field->mul(f->value, o.finite_value()));
  const auto& r = std::get<Rational>(v_);
  return Scalar(r.field, r.value * o.rational_value());
}

Scalar Scalar::inverse() const {
  if (auto* f = std::get_if<Finite>(&v_)) return Scalar(f->field, f->field->inv(f->value));
  const auto& r = std::get<Rational>(v_);
  return Scalar(r.field, r.value.inverse());
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o);
  return *this * o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.same_field(b)) return false;
  if (a.is_finite()) return a.finite_value() == b.finite_value();
  return a.rational_value() == b.rational_value();
}

std::string Scalar::to_string() const {
  if (auto* f = std::get_if<Finite>(&v_)) {
    if (f->field->is_prime_field()) return std::to_string(f->value);
    auto c = f->field->coefficients(f->value);
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  }
  return std::get<Rational>(v_).value.to_string();
}

}  // namespace elemgs
