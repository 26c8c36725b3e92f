#pragma once

// Sparse multivariate polynomials over a finite field and the rational
// function field F_q(t_1..t_m) built on them.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "elemgs/field.hpp"

namespace elemgs {

/// Packed exponent vector: variable 0 occupies the most significant bits, so
/// integer order on the packed word is lexicographic order t_1 > t_2 > ...
using PackedMonomial = std::uint64_t;

class Poly {
 public:
  static constexpr unsigned kMaxVars = 6;
  static constexpr unsigned kBits = 10;
  static constexpr unsigned kMaxExponent = (1u << kBits) - 1;

  using Term = std::pair<PackedMonomial, Elem>;

  Poly() = default;
  Poly(FieldRef field, unsigned nvars);

  static Poly constant(FieldRef field, unsigned nvars, Elem c);
  static Poly variable(FieldRef field, unsigned nvars, unsigned index);
  static Poly monomial(FieldRef field, unsigned nvars, std::span<const unsigned> exps, Elem c);

  const FieldRef& field() const noexcept { return field_; }
  unsigned nvars() const noexcept { return nvars_; }
  /// Terms sorted by strictly decreasing monomial; coefficients nonzero.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Elem leading_coefficient() const noexcept { return terms_.empty() ? 0 : terms_.front().second; }
  unsigned degree_in(unsigned var) const noexcept;
  unsigned total_degree() const noexcept;

  unsigned exponent(PackedMonomial m, unsigned var) const noexcept {
    return unsigned((m >> shift(var)) & kMaxExponent);
  }
  PackedMonomial pack(std::span<const unsigned> exps) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Scaled so the leading coefficient (lex order) is 1; zero stays zero.
  Poly monic() const;

  /// Value at a point of F_{q'} given an embedding table F_q -> F_{q'}.
  Elem evaluate(std::span<const Elem> point, const FiniteField& target, std::span<const Elem> embed) const;

  std::string to_string(const std::string& var_prefix = "t") const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// a / b when b divides a exactly; ConsistencyError otherwise.
  static Poly exact_div(const Poly& a, const Poly& b);

 private:
  unsigned shift(unsigned var) const noexcept { return (kMaxVars - 1 - var) * kBits; }
  void check_compatible(const Poly& o) const;
  static Poly from_sorted(FieldRef field, unsigned nvars, std::vector<Term> terms);

  FieldRef field_;
  unsigned nvars_ = 0;
  std::vector<Term> terms_;

  friend Poly gcd(const Poly& a, const Poly& b);
  friend class PolyOps;
};

/// Monic greatest common divisor (recursive primitive PRS).
Poly gcd(const Poly& a, const Poly& b);

/// Element of F_q(t_1..t_m) kept as num/den with gcd 1 and monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  std::string to_string() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace elemgs
