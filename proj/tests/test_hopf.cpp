#include <doctest.h>

#include "elemgs/errors.hpp"
#include "elemgs/hopf.hpp"

using namespace elemgs;

namespace {

// Naive tensor identities written independently of check_axioms.
bool naive_coassociative(const HopfData& h) {
  const std::size_t d = h.dim;
  const FiniteField& f = *h.field;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
          Elem left = 0, right = 0;
          for (std::size_t m = 0; m < d; ++m) {
            left = f.add(left, f.mul(h.comult_at(k, m, c), h.comult_at(m, a, b)));
            right = f.add(right, f.mul(h.comult_at(k, a, m), h.comult_at(m, b, c)));
          }
          if (left != right) return false;
        }
  return true;
}

bool naive_antipode(const HopfData& h) {
  const std::size_t d = h.dim;
  const FiniteField& f = *h.field;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Elem> acc(d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Elem c = h.comult_at(k, i, j);
        if (!c) continue;
        for (std::size_t a = 0; a < d; ++a) {
          Elem s = h.antipode(a, i);
          if (!s) continue;
          for (std::size_t t = 0; t < d; ++t) acc[t] = f.add(acc[t], f.mul(f.mul(c, s), h.mult_at(a, j, t)));
        }
      }
    for (std::size_t t = 0; t < d; ++t)
      if (acc[t] != f.mul(h.counit[k], h.unit[t])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("coordinate algebra of G_a(1) at p = 2") {
  HopfData h = build_coordinate_hopf(2, 1, 0);
  CHECK(h.dim == 2);
  // T * T = T^2 = 0, Delta(T) = T(x)1 + 1(x)T
  CHECK(h.mult_at(1, 1, 0) == 0);
  CHECK(h.mult_at(1, 1, 1) == 0);
  CHECK(h.comult_at(1, 1, 0) == 1);
  CHECK(h.comult_at(1, 0, 1) == 1);
  CHECK(h.comult_at(1, 1, 1) == 0);
  CHECK(check_axioms(h).hopf());
}

TEST_CASE("functions on Z/2 multiply pointwise") {
  HopfData h = build_coordinate_hopf(2, 0, 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(h.mult_at(i, j, k) == ((i == j && j == k) ? 1u : 0u));
}

TEST_CASE("dimension and rejection rules") {
  CHECK(build_coordinate_hopf(3, 1, 1).dim == 9);
  CHECK_THROWS_AS(build_coordinate_hopf(2, 0, 0), InputError);
  CHECK_THROWS_AS(build_coordinate_hopf(4, 1, 0), InputError);
}

TEST_CASE("dual of G_a(1) is primitive-generated and dual of Z/2 is the group algebra") {
  HopfData d = dualize(build_coordinate_hopf(2, 1, 0));
  // u_0 = T^*: u_0^2 = 0, Delta(u_0) = u_0(x)1 + 1(x)u_0
  CHECK(d.mult_at(1, 1, 0) == 0);
  CHECK(d.mult_at(1, 1, 1) == 0);
  CHECK(d.comult_at(1, 1, 0) == 1);
  CHECK(d.comult_at(1, 0, 1) == 1);
  HopfData g = dualize(build_coordinate_hopf(2, 0, 1));
  // point evaluations are grouplike
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(g.comult_at(k, i, j) == ((i == k && j == k) ? 1u : 0u));
}

TEST_CASE("double dual is the identity") {
  HopfData h = build_coordinate_hopf(3, 1, 1);
  HopfData dd = dualize(dualize(h));
  CHECK(dd.mult == h.mult);
  CHECK(dd.comult == h.comult);
  CHECK(dd.unit == h.unit);
  CHECK(dd.counit == h.counit);
  CHECK(dd.antipode == h.antipode);
}

TEST_CASE("divided powers: gamma_i gamma_j = C(i+j, i) gamma_{i+j} at p = 2, r = 2") {
  HopfData d = dualize(build_coordinate_hopf(2, 2, 0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        Elem want = (k == i + j) ? binomial_mod(i + j, i, 2) : 0;
        CHECK(d.mult_at(i, j, k) == want);
      }
  GeneratorSet gs = truncated_iso_check(d, 2, 2, 0);
  CHECK(gs.generators[0] == std::vector<Elem>{0, 1, 0, 0});
  CHECK(gs.generators[1] == std::vector<Elem>{0, 0, 1, 0});
  CHECK(d.multiply(gs.generators[0], gs.generators[1]) == std::vector<Elem>{0, 0, 0, 1});
}

TEST_CASE("axioms, cocommutativity and truncated structure over the configuration grid") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned r = 0; r <= 2; ++r)
      for (unsigned s = 0; s <= 2; ++s) {
        if (r + s == 0) continue;
        std::size_t dim = 1;
        for (unsigned i = 0; i < r + s; ++i) dim *= p;
        if (dim > 125) continue;
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(s);
        HopfData h = build_coordinate_hopf(p, r, s);
        HopfData d = dualize(h);
        auto ah = check_axioms(h), ad = check_axioms(d);
        CHECK(ah.hopf());
        CHECK(ah.commutative);
        CHECK(ad.hopf());
        CHECK(ad.cocommutative);
        CHECK(d.dim == h.dim);
        if (dim <= 27) {
          CHECK(naive_coassociative(d));
          CHECK(naive_antipode(d));
        }
        GeneratorSet gs = truncated_iso_check(d, p, r, s);
        CHECK(gs.n() == r + s);
        CHECK(gs.monomial_to_basis * gs.basis_to_monomial == Mat::identity(d.field, d.dim));
      }
}

TEST_CASE("truncated iso check names and basis for r = s = 1") {
  HopfData d = dualize(build_coordinate_hopf(2, 1, 1));
  GeneratorSet gs = truncated_iso_check(d, 2, 1, 1);
  CHECK(gs.names == std::vector<std::string>{"u0", "v1"});
  CHECK(rank(gs.monomial_to_basis) == 4);
  std::vector<unsigned> e{1, 1};
  CHECK(gs.monomial_index(e) == 3);
}

TEST_CASE("axiom checker rejects a broken structure") {
  HopfData h = build_coordinate_hopf(3, 1, 0);
  h.comult[(1 * 3 + 1) * 3 + 1] = 1;  // Delta(T) gains T (x) T
  auto rep = check_axioms(h);
  CHECK_FALSE(rep.hopf());
  CHECK_FALSE(rep.failures.empty());
  CHECK_THROWS_AS(dualize(h), InputError);
}

TEST_CASE("sigma - 1 cubed vanishes at p = 3") {
  HopfData d = dualize(build_coordinate_hopf(3, 0, 1));
  GeneratorSet gs = truncated_iso_check(d, 3, 0, 1);
  auto v = gs.generators[0];
  auto v3 = d.multiply(d.multiply(v, v), v);
  CHECK(std::all_of(v3.begin(), v3.end(), [](Elem e) { return e == 0; }));
}
