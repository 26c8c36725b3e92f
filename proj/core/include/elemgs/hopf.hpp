#pragma once

// Structure-constant Hopf algebras: the coordinate algebras
// k[E_{r,s}] = k[T]/(T^{p^r}) (x) Fun((Z/p)^s), their duals, and the
// identification of the dual with a truncated polynomial algebra.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "elemgs/field.hpp"
#include "elemgs/matrix.hpp"

namespace elemgs {

struct HopfData {
  FieldRef field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  /// mult[(i*dim + j)*dim + k] = c^k_{ij}, e_i e_j = sum_k c^k_{ij} e_k.
  std::vector<Elem> mult;
  /// comult[(k*dim + i)*dim + j] = d^{ij}_k, Delta(e_k) = sum d^{ij}_k e_i (x) e_j.
  std::vector<Elem> comult;
  std::vector<Elem> unit;    // coordinates of 1
  std::vector<Elem> counit;  // epsilon(e_i)
  Mat antipode;              // column j = S(e_j)

  Elem mult_at(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
  Elem comult_at(std::size_t k, std::size_t i, std::size_t j) const { return comult[(k * dim + i) * dim + j]; }

  std::vector<Elem> multiply(std::span<const Elem> a, std::span<const Elem> b) const;
};

struct AxiomReport {
  bool associative = false;
  bool unital = false;
  bool coassociative = false;
  bool counital = false;
  bool bialgebra = false;
  bool antipode = false;
  bool commutative = false;
  bool cocommutative = false;
  std::vector<std::string> failures;

  bool hopf() const noexcept { return associative && unital && coassociative && counital && bialgebra && antipode; }
};

/// k[G_{a(r)}] (x) k[E_s]; field defaults to F_p when null.
HopfData build_coordinate_hopf(std::uint32_t p, unsigned r, unsigned s, FieldRef field = nullptr);
HopfData tensor_product(const HopfData& a, const HopfData& b);
/// Linear dual: multiplication and comultiplication swap roles.
HopfData dualize(const HopfData& h);
AxiomReport check_axioms(const HopfData& h);

/// Generators u_0..u_{r-1}, v_1..v_s of the dual algebra and the change of
/// basis between Hopf coordinates and the monomial basis
/// u^a v^b (exponents < p), indexed by sum_g e_g p^g in generator order.
struct GeneratorSet {
  std::uint32_t p = 2;
  unsigned r = 0, s = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Elem>> generators;  // Hopf-basis coordinates
  Mat monomial_to_basis;                      // column = monomial in Hopf coordinates
  Mat basis_to_monomial;                      // inverse

  std::size_t n() const noexcept { return r + s; }
  std::size_t monomial_index(std::span<const unsigned> exps) const;
};

/// Verifies that dualize(build_coordinate_hopf(p, r, s)) is the truncated
/// polynomial algebra on u_j = (T^{p^j})^* and v_i = sigma_i - 1. Throws
/// ConsistencyError on any failure.
GeneratorSet truncated_iso_check(const HopfData& dual, std::uint32_t p, unsigned r, unsigned s);

}  // namespace elemgs
