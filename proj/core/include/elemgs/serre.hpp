#pragma once

// Steenrod-stable ideals of H^*(E_{r,s}, k) truncated at a degree cap, and
// the constructive extraction procedures: descent to F_p, products of linear
// forms in the z_j, powers of x_r, and the combined x_r^m * prod u_i.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "elemgs/cohomology.hpp"
#include "elemgs/matrix.hpp"

namespace elemgs {

unsigned default_degree_cap(std::uint32_t p);

/// All monomial keys of a degree, in canonical (descending) order.
std::vector<MonomialKey> monomials_of_degree(const CohContext& ctx, unsigned degree);

/// Degreewise k-bases of the smallest Steenrod-stable ideal containing the
/// generators, computed lazily up to the cap. Thread-safe.
class GradedIdealSpan {
 public:
  GradedIdealSpan(CohContextRef ctx, std::vector<CohElement> generators, unsigned cap);
  GradedIdealSpan(const GradedIdealSpan&) = delete;
  GradedIdealSpan& operator=(const GradedIdealSpan&) = delete;

  const CohContextRef& context() const noexcept { return ctx_; }
  unsigned cap() const noexcept { return cap_; }
  const std::vector<CohElement>& generators() const noexcept { return generators_; }

  /// Echelon basis of I in this degree; InconclusiveError above the cap.
  std::vector<CohElement> basis(unsigned degree) const;
  std::size_t dimension(unsigned degree) const;

  struct Membership {
    bool member = false;
    /// Coefficients over basis(degree) when member (empty for zero).
    std::vector<Elem> coordinates;
  };
  Membership membership(const CohElement& a) const;

 private:
  struct Piece {
    std::vector<MonomialKey> monomials;
    std::map<MonomialKey, std::size_t, std::greater<>> index;
    EchelonBasis stable;  // the Steenrod-closed span of the generators
    EchelonBasis ideal;
  };
  const Piece& piece(unsigned degree) const;
  void build(unsigned degree) const;
  std::vector<Elem> to_vector(const Piece& pc, const CohElement& a) const;
  CohElement to_element(const Piece& pc, const std::vector<Elem>& v) const;

  CohContextRef ctx_;
  std::vector<CohElement> generators_;
  unsigned cap_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<unsigned, std::unique_ptr<Piece>> pieces_;
  friend class SpanAccess;
};

std::unique_ptr<GradedIdealSpan> steenrod_closure(const std::vector<CohElement>& generators, unsigned cap);

GradedIdealSpan::Membership graded_membership(const GradedIdealSpan& ideal, const CohElement& a);

/// Scales so that the leading (canonically first) coefficient is 1.
CohElement normalize_leading(const CohElement& a);

/// Iterates f <- normalize(P^0(f) - f) from normalize(f) until P^0 fixes f;
/// the result has coefficients in F_p. f must lie in the z-subring.
CohElement descend_to_prime_field(const CohElement& f);
/// Descent started from a minimal-degree, minimal-support element of I in
/// the z-subring; InconclusiveError when none exists up to the cap.
CohElement descend_to_prime_field(const GradedIdealSpan& ideal);

/// Normalized F_p-linear forms in z_1..z_s (first nonzero coefficient 1), lexicographic.
std::vector<CohElement> normalized_linear_forms(const CohContextRef& ctx);

/// First multiset of normalized linear forms, by increasing length and
/// lexicographic within a length, whose product lies in I.
std::vector<CohElement> linear_form_product_search(const GradedIdealSpan& ideal, unsigned max_length = 16);

struct CertificateStep {
  enum class Kind { operation, normalize, descend };
  Kind kind = Kind::operation;
  OperationId op;
  std::string name() const;
  static CertificateStep parse(std::string_view text);
};

struct ExtractionCertificate {
  CohElement initial;
  std::vector<CertificateStep> steps;
  CohElement final_element;
  unsigned m = 0;
  std::vector<CohElement> forms;
  CohElement product;  // x_r^m * prod forms
  std::string branch;
  bool verified = false;
  bool final_proportional_to_product = false;

  explicit ExtractionCertificate(const CohContextRef& ctx)
      : initial(ctx), final_element(ctx), product(ctx) {}
};

CohElement apply_step(const CertificateStep& step, const CohElement& a);
CohElement replay(const CohElement& initial, const std::vector<CertificateStep>& steps);
/// Replays the steps, checks the product shape and that both the final
/// element and the product lie in I.
bool verify_certificate(const ExtractionCertificate& cert, const GradedIdealSpan& ideal);

/// u must be a nonzero degree-2 element of H^*(G_{a(r)}) lying in I.
ExtractionCertificate xr_power_extract(const GradedIdealSpan& ideal, const CohElement& u);

/// u must be a nonzero degree-2 element of I.
ExtractionCertificate serre3_extract(const GradedIdealSpan& ideal, const CohElement& u, unsigned max_forms = 16);

}  // namespace elemgs
