#pragma once

// Minimal free resolutions over A_n by degreewise k-linear algebra, Ext
// dimensions through the Hom complex, the H^1 projectivity criterion and
// Carlson-type kernels L_zeta.

#include <cstdint>
#include <vector>

#include "elemgs/module.hpp"
#include "elemgs/projtest.hpp"

namespace elemgs {

struct Resolution {
  std::uint32_t p = 2;
  std::size_t n = 0;
  FieldRef field;
  std::vector<std::size_t> betti;  // b_0..b_L
  /// augmentation[g] = image in M of the g-th generator of F_0.
  std::vector<std::vector<Elem>> augmentation;
  /// differentials[i-1] = d_i : A^{b_i} -> A^{b_{i-1}} for i = 1..L;
  /// entry [h][g] is the A_n-coefficient of e_h in d_i(e_g).
  std::vector<std::vector<std::vector<TruncatedAlgebra::Element>>> differentials;

  std::size_t length() const noexcept { return betti.empty() ? 0 : betti.size() - 1; }
  /// d_i as a k-linear map A^{b_i} -> A^{b_{i-1}} (basis index g * p^n + monomial).
  Mat expanded(std::size_t i) const;
  /// Kernel of d_L over k (the last computed syzygy), as columns.
  Mat last_syzygy;
};

Resolution minimal_resolution(const ModuleRep& m, std::size_t length);

/// dim Ext^i(k, M) for i = 0..length.
std::vector<std::size_t> ext_dims(const ModuleRep& m, std::size_t length);

Verdict h1_projectivity(const ModuleRep& m);

/// zeta = a y_1^2 + b y_1 y_2 + c y_2^2 in H^2(E_2, k), p = 2.
struct QuadraticForm {
  Elem a = 0, b = 0, c = 0;
};

/// Kernel of the map Omega^2 k -> k representing zeta, as a submodule of
/// A^2 (Omega^2 k sits in the degree-1 term of the minimal resolution of k).
ModuleRep carlson_kernel(const QuadraticForm& zeta, FieldRef field = nullptr);

}  // namespace elemgs
