#pragma once

// Exact arithmetic in finite fields F_q, q = p^k.
//
// Elements are encoded as integers in [0, q): the code of
//   c_0 + c_1 a + ... + c_{k-1} a^{k-1}   (a a root of the modulus)
// is c_0 + c_1 p + ... + c_{k-1} p^{k-1}. In particular the prime subfield
// occupies codes 0..p-1 and a residue has the same code in every extension
// of F_p, which is what lets matrices over F_p be reused verbatim over F_{p^k}.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace elemgs {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Binomial coefficient C(n, k) reduced mod p (Lucas).
std::uint32_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

class FiniteField;
using FieldRef = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  static FieldRef prime(std::uint32_t p);
  /// F_p[a]/(modulus); modulus given low-to-high, monic, irreducible.
  static FieldRef extension(std::uint32_t p, std::vector<std::uint32_t> modulus);
  /// F_{p^k} with the lexicographically least monic irreducible of degree k.
  static FieldRef extension(std::uint32_t p, unsigned degree);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  Elem add(Elem a, Elem b) const noexcept {
    if (k_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return Elem((std::uint64_t(a) * b) % p_);
    std::uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem frobenius(Elem a) const noexcept { return pow(a, p_); }
  Elem from_int(std::int64_t v) const noexcept;
  bool in_prime_field(Elem a) const noexcept { return a < p_; }
  bool contains(Elem a) const noexcept { return a < q_; }

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const std::uint32_t> c) const;

  /// "F_5" or "F_2[a]/(1+a+a^2)".
  std::string name() const;

  bool same_as(const FiniteField& o) const noexcept {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }

 private:
  FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);
  Elem add_digits(Elem a, Elem b) const noexcept;

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_, log_, inv_, neg_table_;
  std::vector<std::uint16_t> add_table_;
};

bool same_field(const FieldRef& a, const FieldRef& b) noexcept;

/// Irreducibility of a monic polynomial over F_p by trial division against
/// every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

/// Image table of an embedding F_{p^a} -> F_{p^b} (a | b); index by source code.
/// The generator is sent to the least-coded root of the source modulus.
std::vector<Elem> embedding(const FieldRef& from, const FieldRef& to);

}  // namespace elemgs
