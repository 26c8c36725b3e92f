#include <doctest.h>

#include <random>

#include "elemgs/errors.hpp"
#include "elemgs/projtest.hpp"
#include "elemgs/resolution.hpp"

using namespace elemgs;

namespace {

ModuleRep quotient_x1(std::uint32_t p = 2) {
  auto f = FiniteField::prime(p);
  TruncatedAlgebra a(p, 2, f);
  return presentation_cokernel(p, 2, f, Presentation{1, {{a.generator(0)}}});
}

}  // namespace

TEST_CASE("radical/top test examples") {
  CHECK(radical_top_test(free_module(2, 1, 1, nullptr)).status == Status::projective);
  auto k = radical_top_test(trivial_module(2, 1, nullptr));
  CHECK(k.status == Status::not_projective);
  REQUIRE(k.witness);
  CHECK(k.witness->observed == 1);
  CHECK(k.witness->expected == 2);
  auto q = radical_top_test(quotient_x1());
  CHECK(q.status == Status::not_projective);
  CHECK(q.witness->expected == 4);
}

TEST_CASE("cyclic freeness examples") {
  auto f3 = FiniteField::prime(3), f2 = FiniteField::prime(2);
  auto prof = cyclic_freeness(free_module(3, 1, 1, f3), ShiftedElement{f3, {1}});
  CHECK(prof.free);
  CHECK(prof.ranks == std::vector<std::size_t>{3, 2, 1});
  auto q = quotient_x1();
  CHECK_FALSE(cyclic_freeness(q, ShiftedElement{f2, {1, 0}}).free);
  CHECK(cyclic_freeness(q, ShiftedElement{f2, {0, 1}}).free);
  CHECK_THROWS_AS(cyclic_freeness(q, ShiftedElement{f2, {0, 0}}), InputError);
}

TEST_CASE("Dade scans") {
  auto q = dade_scan(quotient_x1(), 1);
  CHECK(q.status == Status::not_projective);
  REQUIRE(q.witness);
  CHECK(q.witness->c == std::vector<Elem>{1, 0});
  CHECK(q.witness->ext == 1);
  CHECK(dade_scan(free_module(2, 2, 1, nullptr), 2).status == Status::projective);
  CHECK(dade_scan(free_module(2, 2, 1, nullptr), 1).status == Status::inconclusive);
  CHECK(dade_scan(free_module(3, 2, 2, nullptr), 2).status == Status::projective);
  CHECK(dade_scan(free_module(3, 3, 1, nullptr), 2).status == Status::inconclusive);
  // p does not divide dim: every point fails
  auto k = dade_scan(trivial_module(3, 2, nullptr), 2);
  CHECK(k.status == Status::not_projective);
  CHECK(k.witness->c == std::vector<Elem>{0, 1});
}

TEST_CASE("generic point test") {
  CHECK(generic_point_test(quotient_x1()));
  CHECK(generic_point_test(free_module(3, 2, 1, nullptr)));
  CHECK(generic_point_test(free_module(2, 3, 2, nullptr)));
  CHECK_FALSE(generic_point_test(trivial_module(2, 2, nullptr)));
}

TEST_CASE("rank variety generators") {
  auto f2 = FiniteField::prime(2);
  auto rv = rank_variety_generators(quotient_x1());
  CHECK_FALSE(rv.degenerate);
  REQUIRE(rv.generators.size() == 1);
  CHECK(rv.generators[0] == Poly::variable(f2, 2, 1));

  auto fr = rank_variety_generators(free_module(2, 2, 1, f2));
  CHECK(fr.minor_size == 2);
  // zero set is {0}: over F_4 no nonzero point kills every minor
  auto f4 = FiniteField::extension(2, 2u);
  auto emb = embedding(f2, f4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      if (!a && !b) continue;
      std::vector<Elem> pt{a, b};
      bool all_zero = true;
      for (const auto& g : fr.generators) all_zero = all_zero && g.evaluate(pt, *f4, emb) == 0;
      CHECK_FALSE(all_zero);
    }

  auto kk = direct_sum(direct_sum(trivial_module(2, 2, f2), trivial_module(2, 2, f2)), free_module(2, 2, 1, f2));
  auto deg = rank_variety_generators(kk);
  CHECK_FALSE(deg.degenerate);
  CHECK(deg.generators.empty());

  CHECK(rank_variety_generators(direct_sum(trivial_module(2, 2, f2), free_module(2, 2, 1, f2))).degenerate);
}

TEST_CASE("rank variety vanishing matches cyclic freeness pointwise") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    std::uint32_t p = trial % 2 ? 3 : 2;
    auto f = FiniteField::prime(p);
    TruncatedAlgebra a(p, 2, f);
    auto rel = a.zero();
    for (std::size_t i = 1; i < a.dim(); ++i) rel[i] = Elem(rng() % p);
    auto m = direct_sum(presentation_cokernel(p, 2, f, Presentation{1, {{rel}}}), free_module(p, 2, 1, f));
    if (m.dim % p) continue;
    auto rv = rank_variety_generators(m);
    auto ext = FiniteField::extension(p, 2u);
    auto emb = embedding(f, ext);
    for (Elem c1 = 0; c1 < ext->order(); ++c1)
      for (Elem c2 = 0; c2 < ext->order(); ++c2) {
        if (!c1 && !c2) continue;
        std::vector<Elem> pt{c1, c2};
        bool vanish = true;
        for (const auto& g : rv.generators) vanish = vanish && g.evaluate(pt, *ext, emb) == 0;
        CHECK(vanish == !cyclic_freeness(m, ShiftedElement{ext, pt}).free);
      }
  }
}

TEST_CASE("direct sums: projective iff both summands are, for every detector") {
  auto f = FiniteField::prime(2);
  std::vector<ModuleRep> ms{free_module(2, 2, 1, f), quotient_x1(), trivial_module(2, 2, f)};
  for (const auto& a : ms)
    for (const auto& b : ms) {
      auto s = direct_sum(a, b);
      bool both = radical_top_test(a).status == Status::projective && radical_top_test(b).status == Status::projective;
      CHECK((radical_top_test(s).status == Status::projective) == both);
      CHECK((dade_scan(s, 2).status == Status::projective) == both);
      CHECK((h1_projectivity(s).status == Status::projective) == both);
    }
}

TEST_CASE("witnesses survive field embedding") {
  QuadraticForm z{1, 1, 1};
  auto l = carlson_kernel(z);
  auto v = dade_scan(l, 2);
  REQUIRE(v.status == Status::not_projective);
  auto f16 = FiniteField::extension(2, 4u);
  auto emb = embedding(v.witness->field, f16);
  std::vector<Elem> c;
  for (Elem e : v.witness->c) c.push_back(emb[e]);
  CHECK_FALSE(cyclic_freeness(l, ShiftedElement{f16, c}).free);
}
