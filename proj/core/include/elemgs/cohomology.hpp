#pragma once

// H^*(E_{r,s}, k) and its Steenrod operations.
//
// p > 2: k[x_1..x_r] (x) L(l_1..l_r) (x) k[z_1..z_s] (x) L(y_1..y_s), with x, z
// in degree 2 and l, y in degree 1. p = 2: k[l_1..l_r, y_1..y_s] with
// x_i = l_i^2 and z_i = y_i^2.
//
// A monomial key stores, for p > 2, [x_1..x_r, l_1..l_r, z_1..z_s, y_1..y_s]
// (the l and y entries are 0/1), and for p = 2, [l_1..l_r, y_1..y_s]. The
// odd generators of a monomial are read in the order l_1..l_r, y_1..y_s.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elemgs/field.hpp"

namespace elemgs {

struct CohContext {
  std::uint32_t p = 2;
  unsigned r = 0, s = 0;
  FieldRef field;

  std::size_t key_size() const noexcept { return p == 2 ? r + s : 2 * (r + s); }
  std::size_t x_pos(unsigned i) const noexcept { return i; }          // p > 2
  std::size_t l_pos(unsigned i) const noexcept { return p == 2 ? i : r + i; }
  std::size_t z_pos(unsigned j) const noexcept { return 2 * r + j; }  // p > 2
  std::size_t y_pos(unsigned j) const noexcept { return p == 2 ? r + j : 2 * r + s + j; }
  bool odd_position(std::size_t pos) const noexcept {
    return p != 2 && ((pos >= r && pos < 2 * r) || pos >= 2 * r + s);
  }
  bool same_as(const CohContext& o) const noexcept {
    return p == o.p && r == o.r && s == o.s && same_field(field, o.field);
  }
};
using CohContextRef = std::shared_ptr<const CohContext>;

/// field defaults to F_p.
CohContextRef make_context(std::uint32_t p, unsigned r, unsigned s, FieldRef field = nullptr);

using MonomialKey = std::vector<std::uint16_t>;

int monomial_degree(const CohContext& ctx, const MonomialKey& key);

class CohElement {
 public:
  using Terms = std::map<MonomialKey, Elem, std::greater<>>;

  explicit CohElement(CohContextRef ctx);

  static CohElement one(CohContextRef ctx);
  /// kind is one of 'x', 'l', 'z', 'y'; index is 1-based.
  static CohElement generator(CohContextRef ctx, char kind, unsigned index);
  static CohElement monomial(CohContextRef ctx, MonomialKey key, Elem coeff = 1);

  const CohContextRef& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Elem coefficient(const MonomialKey& key) const;
  /// Degree of a nonzero homogeneous element.
  std::optional<int> degree() const;
  bool is_homogeneous() const;

  CohElement operator+(const CohElement& o) const;
  CohElement operator-(const CohElement& o) const;
  CohElement operator-() const;
  CohElement operator*(const CohElement& o) const;
  CohElement scaled(Elem c) const;
  CohElement& operator+=(const CohElement& o);

  /// Adds c * (monomial key) in place.
  void add_term(const MonomialKey& key, Elem c);

  friend bool operator==(const CohElement& a, const CohElement& b) {
    return a.ctx_->same_as(*b.ctx_) && a.terms_ == b.terms_;
  }

 private:
  void require_same(const CohElement& o) const;
  CohContextRef ctx_;
  Terms terms_;
};

CohElement multiply(const CohElement& a, const CohElement& b);

struct OperationId {
  enum class Kind { P, BP, Sq };
  Kind kind = Kind::P;
  unsigned index = 0;

  int degree_shift(std::uint32_t p) const noexcept;
  /// "P1", "bP0", "Sq3".
  std::string name() const;
  /// Accepts P1, P^1, bP0, BP0, bP^0, Sq3, Sq^3.
  static OperationId parse(std::string_view text);

  friend bool operator==(const OperationId&, const OperationId&) = default;
};

/// Applied termwise; Frobenius-semilinear on scalars.
CohElement steenrod_apply(const OperationId& op, const CohElement& a);

/// Sum of all P^j (Sq^j when p = 2), on the polynomial subring in the z_j.
CohElement theta(const CohElement& a);

CohElement parse_element(const CohContextRef& ctx, std::string_view text);
std::string format_element(const CohElement& a);

}  // namespace elemgs
