#pragma once

// Finite-dimensional modules over A_n = k[x_1..x_n]/(x_1^p..x_n^p).
//
// Convention used throughout (and in the module file format): column j of
// the action matrix X_i is the image of basis vector j under x_i.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "elemgs/field.hpp"
#include "elemgs/hopf.hpp"
#include "elemgs/matrix.hpp"

namespace elemgs {

/// A_n with its monomial basis; the monomial x^e has index sum_i e_i p^i.
class TruncatedAlgebra {
 public:
  using Element = std::vector<Elem>;

  TruncatedAlgebra(std::uint32_t p, std::size_t n, FieldRef field);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  const FieldRef& field() const noexcept { return field_; }

  std::vector<unsigned> exponents(std::size_t index) const;
  std::size_t index(std::span<const unsigned> exps) const;
  /// Index of x_g * x^e, or dim() when the product vanishes.
  std::size_t shift(std::size_t index, std::size_t g) const noexcept;

  Element zero() const { return Element(dim_, 0); }
  Element one() const;
  Element generator(std::size_t g) const;
  Element multiply(const Element& a, const Element& b) const;
  bool in_radical(const Element& a) const { return a.at(0) == 0; }

  /// Matrices of all monomials acting through the commuting tuple X_1..X_n.
  std::vector<Mat> monomial_actions(std::span<const Mat> actions) const;
  /// sum_m a_m X^m using precomputed monomial actions.
  Mat act(const Element& a, std::span<const Mat> monomial_actions) const;

  std::string to_string(const Element& a) const;

 private:
  std::uint32_t p_;
  std::size_t n_, dim_;
  FieldRef field_;
};

struct ModuleRep {
  FieldRef field;
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<Mat> actions;

  friend bool operator==(const ModuleRep& a, const ModuleRep& b) {
    return same_field(a.field, b.field) && a.p == b.p && a.n == b.n && a.dim == b.dim && a.actions == b.actions;
  }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks shapes, X_i X_j = X_j X_i and X_i^p = 0; never throws.
ValidationReport validate_module(const ModuleRep& m);

ModuleRep trivial_module(std::uint32_t p, std::size_t n, FieldRef field);
/// t copies of the regular representation.
ModuleRep free_module(std::uint32_t p, std::size_t n, std::size_t rank, FieldRef field);

/// Cokernel of A^a -> A^b; relations[c] is the image of the c-th basis vector
/// (a vector of b algebra elements).
struct Presentation {
  std::size_t generators = 0;
  std::vector<std::vector<TruncatedAlgebra::Element>> relations;
};
ModuleRep presentation_cokernel(std::uint32_t p, std::size_t n, FieldRef field, const Presentation& pres);

/// Algebra map A_m -> A_n given by the images of the m generators.
struct AlgebraMap {
  std::vector<TruncatedAlgebra::Element> images;
};
ModuleRep restrict_module(const ModuleRep& m, const AlgebraMap& f);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
/// Diagonal action through the comultiplication of the Hopf algebra whose
/// algebra structure is identified with A_n by the generator set.
ModuleRep tensor(const ModuleRep& a, const ModuleRep& b, const HopfData& h, const GeneratorSet& gens);
/// Base change along an embedding of finite fields.
ModuleRep extend_scalars(const ModuleRep& m, const FieldRef& to);

/// The submodule spanned by the columns of `basis` (which must be linearly
/// independent and stable under every X_i), in the coordinates of those columns.
ModuleRep submodule(const ModuleRep& m, const Mat& basis);

}  // namespace elemgs
