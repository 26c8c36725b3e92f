#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "elemgs/field.hpp"
#include "elemgs/poly.hpp"

namespace elemgs {

/// Value-level description of a coefficient field.
struct FieldSpec {
  enum class Kind { prime, ext, rational };
  Kind kind = Kind::prime;
  std::uint32_t p = 2;
  /// Modulus of the finite field (low-to-high); for rational, the base field's modulus.
  std::vector<std::uint32_t> poly;
  /// Number of transcendentals for Kind::rational.
  unsigned vars = 0;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  std::string describe() const;
};

FieldSpec spec_of(const FiniteField& f);
/// Build the finite field a spec names; rational specs are rejected.
FieldRef make_finite_field(const FieldSpec& spec);

/// F_q(t_1..t_m).
class RationalField {
 public:
  RationalField(FieldRef base, unsigned vars);
  const FieldRef& base() const noexcept { return base_; }
  unsigned vars() const noexcept { return vars_; }
  FieldSpec spec() const;
  RatFunc variable(unsigned i) const;
  RatFunc constant(Elem c) const;
  bool same_as(const RationalField& o) const noexcept {
    return vars_ == o.vars_ && base_->same_as(*o.base_);
  }

 private:
  FieldRef base_;
  unsigned vars_;
};
using RationalFieldRef = std::shared_ptr<const RationalField>;

/// A field element tagged with its field. Arithmetic between elements of
/// different fields raises InputError.
class Scalar {
 public:
  Scalar(FieldRef field, Elem value);
  Scalar(RationalFieldRef field, RatFunc value);

  FieldSpec spec() const;
  bool is_finite() const noexcept { return std::holds_alternative<Finite>(v_); }
  bool is_zero() const noexcept;
  const FieldRef& finite_field() const;
  Elem finite_value() const;
  const RationalFieldRef& rational_field() const;
  const RatFunc& rational_value() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  bool same_field(const Scalar& o) const noexcept;
  friend bool operator==(const Scalar& a, const Scalar& b);
  std::string to_string() const;

 private:
  struct Finite {
    FieldRef field;
    Elem value;
  };
  struct Rational {
    RationalFieldRef field;
    RatFunc value;
  };
  void require_same(const Scalar& o) const;
  std::variant<Finite, Rational> v_;
};

}  // namespace elemgs
