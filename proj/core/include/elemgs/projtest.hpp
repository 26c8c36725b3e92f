#pragma once

// Projectivity detectors for modules over A_n: the local radical/top count,
// freeness on cyclic shifted subalgebras k[x]/(x^p) with x = sum c_i x_i,
// scans over finite extensions, the generic-point test over F_q(t_1..t_n),
// and equations of the rank variety.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elemgs/module.hpp"
#include "elemgs/poly.hpp"

namespace elemgs {

enum class Status { projective, not_projective, inconclusive };
const char* status_name(Status s) noexcept;

struct Witness {
  enum class Kind { point, dimension, cohomology };
  Kind kind = Kind::point;
  // Kind::point: a shifted element over `field` that is not free; `ext` is
  // the degree of `field` over the module's field.
  std::vector<Elem> c;
  FieldRef field;
  unsigned ext = 1;
  // Kind::dimension: observed vs required dimension. Kind::cohomology: dim Ext^1.
  std::size_t observed = 0, expected = 0;
};

struct Verdict {
  Status status = Status::inconclusive;
  std::string method;
  std::optional<Witness> witness;
  std::string note;
};

struct ShiftedElement {
  FieldRef field;
  std::vector<Elem> c;
};

struct JordanProfile {
  bool free = false;
  /// ranks[j] = rank X^j for j = 0..p-1 (ranks[0] = dim).
  std::vector<std::size_t> ranks;
};

Verdict radical_top_test(const ModuleRep& m);

/// The shifted element may live in an extension of the module's field.
JordanProfile cyclic_freeness(const ModuleRep& m, const ShiftedElement& c);

struct DadeOptions {
  /// A positive verdict is only issued inside these bounds.
  std::size_t max_dim = 24;
  std::size_t max_n = 3;
  unsigned min_ext_degree = 2;
};

/// Scans every projective point over the extensions of relative degree
/// 1..max_ext_degree of the module's field, in lexicographic order with the
/// first nonzero coordinate equal to 1.
Verdict dade_scan(const ModuleRep& m, unsigned max_ext_degree, const DadeOptions& opts = {});

bool generic_point_test(const ModuleRep& m);

struct RankVariety {
  bool degenerate = false;  // p does not divide dim: every point fails
  bool truncated = false;   // minor enumeration hit the cap
  std::size_t minor_size = 0;
  std::vector<Poly> generators;  // monic, distinct, nonzero
};

/// q x q minors of (sum c_i X_i)^{p-1}, q = dim/p; rank < q iff all vanish.
RankVariety rank_variety_generators(const ModuleRep& m, std::size_t max_minors = 20000);

}  // namespace elemgs
