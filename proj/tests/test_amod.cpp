#include <doctest.h>

#include <random>

#include "elemgs/errors.hpp"
#include "elemgs/module.hpp"
#include "elemgs/projtest.hpp"

using namespace elemgs;

namespace {

TruncatedAlgebra::Element mono(const TruncatedAlgebra& a, std::vector<unsigned> e, Elem c = 1) {
  auto v = a.zero();
  v[a.index(e)] = c;
  return v;
}

}  // namespace

TEST_CASE("validate_module examples") {
  auto f2 = FiniteField::prime(2);
  ModuleRep a1{f2, 2, 1, 2, {Mat::from_rows(f2, {{0, 0}, {1, 0}})}};
  CHECK(validate_module(a1).ok);

  ModuleRep bad{f2, 2, 2, 2, {Mat::from_rows(f2, {{0, 1}, {0, 0}}), Mat::from_rows(f2, {{0, 0}, {1, 0}})}};
  auto rep = validate_module(bad);
  CHECK_FALSE(rep.ok);
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations.front().find("X_1 X_2") != std::string::npos);

  ModuleRep id{f2, 2, 1, 2, {Mat::identity(f2, 2)}};
  auto r2 = validate_module(id);
  CHECK_FALSE(r2.ok);
  CHECK(r2.violations.front().find("X_1^p") != std::string::npos);

  ModuleRep shape{f2, 2, 2, 2, {Mat::identity(f2, 2)}};
  CHECK_FALSE(validate_module(shape).ok);
}

TEST_CASE("free modules") {
  auto m = free_module(2, 1, 1, nullptr);
  CHECK(m.dim == 2);
  CHECK(m.actions[0] == Mat::from_rows(FiniteField::prime(2), {{0, 0}, {1, 0}}));
  auto m3 = free_module(3, 1, 1, nullptr);
  CHECK(m3.actions[0] == Mat::from_rows(FiniteField::prime(3), {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
  auto m22 = free_module(2, 2, 1, nullptr);
  CHECK(m22.dim == 4);
  CHECK(rank(m22.actions[0]) == 2);
  CHECK(rank(m22.actions[1]) == 2);
  CHECK(validate_module(free_module(3, 2, 2, nullptr)).ok);
  CHECK_THROWS_AS(free_module(2, 1, 0, nullptr), InputError);
}

TEST_CASE("presentation cokernels") {
  auto f2 = FiniteField::prime(2);
  TruncatedAlgebra a1(2, 1, f2), a2(2, 2, f2);
  Presentation p1{1, {{a1.generator(0)}}};
  auto k = presentation_cokernel(2, 1, f2, p1);
  CHECK(k.dim == 1);
  CHECK(k.actions[0].is_zero());

  Presentation p2{1, {{a2.generator(0)}}};
  auto q = presentation_cokernel(2, 2, f2, p2);
  CHECK(q.dim == 2);
  CHECK(q.actions[0].is_zero());
  CHECK(q.actions[1] == Mat::from_rows(f2, {{0, 0}, {1, 0}}));

  Presentation none{2, {}};
  CHECK(presentation_cokernel(2, 2, f2, none) == free_module(2, 2, 2, f2));
}

TEST_CASE("cokernel dimension equals b p^n minus the rank of the expanded relation map") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::uint32_t p = trial % 2 ? 3 : 2;
    std::size_t n = 1 + rng() % 2;
    auto f = FiniteField::prime(p);
    TruncatedAlgebra alg(p, n, f);
    Presentation pres;
    pres.generators = 1 + rng() % 2;
    std::size_t rels = rng() % 3;
    for (std::size_t c = 0; c < rels; ++c) {
      std::vector<TruncatedAlgebra::Element> rel;
      for (std::size_t g = 0; g < pres.generators; ++g) {
        auto e = alg.zero();
        for (std::size_t i = 1; i < alg.dim(); ++i) e[i] = rng() % 3 == 0 ? Elem(rng() % p) : 0;
        rel.push_back(e);
      }
      pres.relations.push_back(rel);
    }
    auto m = presentation_cokernel(p, n, f, pres);
    CHECK(validate_module(m).ok);
    // oracle: span of all monomial multiples of the relations
    const std::size_t P = alg.dim(), V = pres.generators * P;
    Mat big(f, V, rels * P);
    for (std::size_t c = 0; c < rels; ++c)
      for (std::size_t mu = 0; mu < P; ++mu) {
        auto xm = alg.zero();
        xm[mu] = 1;
        for (std::size_t g = 0; g < pres.generators; ++g) {
          auto prod = alg.multiply(xm, pres.relations[c][g]);
          for (std::size_t t = 0; t < P; ++t) big(g * P + t, c * P + mu) = prod[t];
        }
      }
    CHECK(m.dim == V - (rels ? rank(big) : 0));
  }
}

TEST_CASE("restriction") {
  auto f2 = FiniteField::prime(2);
  TruncatedAlgebra a2(2, 2, f2);
  auto free2 = free_module(2, 2, 1, f2);
  auto sum = a2.generator(0);
  sum[a2.index(std::vector<unsigned>{0, 1})] = 1;
  auto r = restrict_module(free2, AlgebraMap{{sum}});
  CHECK(r.n == 1);
  CHECK(r.dim == 4);
  CHECK(rank(r.actions[0]) == 2);
  CHECK(radical_top_test(r).status == Status::projective);

  auto x1 = restrict_module(free2, AlgebraMap{{a2.generator(0)}});
  CHECK(x1.actions[0] == free2.actions[0]);

  auto k = trivial_module(2, 2, f2);
  CHECK(restrict_module(k, AlgebraMap{{sum}}) == trivial_module(2, 1, f2));

  CHECK_THROWS_AS(restrict_module(free2, AlgebraMap{{a2.one()}}), InputError);
}

TEST_CASE("direct sums") {
  auto f3 = FiniteField::prime(3);
  auto k = trivial_module(3, 2, f3);
  auto kk = direct_sum(k, k);
  CHECK(kk.dim == 2);
  CHECK(kk.actions[0].is_zero());
  auto ff = direct_sum(free_module(3, 2, 1, f3), free_module(3, 2, 2, f3));
  CHECK(ff == free_module(3, 2, 3, f3));
  CHECK_THROWS_AS(direct_sum(k, trivial_module(3, 1, f3)), InputError);
}

TEST_CASE("tensor products through the comultiplication") {
  SUBCASE("trivial module is a unit") {
    for (auto [p, r, s] : {std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 1u}, std::tuple{2u, 2u, 0u}, std::tuple{3u, 0u, 2u}}) {
      HopfData d = dualize(build_coordinate_hopf(p, r, s));
      GeneratorSet gs = truncated_iso_check(d, p, r, s);
      auto f = FiniteField::prime(p);
      TruncatedAlgebra alg(p, r + s, f);
      Presentation pres{1, {{alg.generator(0)}}};
      auto m = presentation_cokernel(p, r + s, f, pres);
      CHECK(tensor(trivial_module(p, r + s, f), m, d, gs) == m);
      CHECK(tensor(m, trivial_module(p, r + s, f), d, gs) == m);
    }
  }
  SUBCASE("grouplike generator at p = 2") {
    HopfData d = dualize(build_coordinate_hopf(2, 0, 1));
    GeneratorSet gs = truncated_iso_check(d, 2, 0, 1);
    auto f = FiniteField::prime(2);
    auto m = free_module(2, 1, 1, f);
    auto n = direct_sum(free_module(2, 1, 1, f), trivial_module(2, 1, f));
    auto t = tensor(m, n, d, gs);
    const Mat& v = m.actions[0];
    const Mat& w = n.actions[0];
    Mat want = Mat::kron(v, Mat::identity(f, n.dim)) + Mat::kron(Mat::identity(f, m.dim), w) + Mat::kron(v, w);
    CHECK(t.actions[0] == want);
  }
  SUBCASE("primitive generator at p = 2") {
    HopfData d = dualize(build_coordinate_hopf(2, 1, 0));
    GeneratorSet gs = truncated_iso_check(d, 2, 1, 0);
    auto f = FiniteField::prime(2);
    auto m = free_module(2, 1, 1, f);
    auto t = tensor(m, m, d, gs);
    Mat want = Mat::kron(m.actions[0], Mat::identity(f, 2)) + Mat::kron(Mat::identity(f, 2), m.actions[0]);
    CHECK(t.actions[0] == want);
  }
  SUBCASE("free tensor anything is free") {
    std::mt19937_64 rng(5);
    for (auto [p, r, s] : {std::tuple{2u, 1u, 1u}, std::tuple{3u, 1u, 1u}, std::tuple{2u, 0u, 2u}, std::tuple{2u, 2u, 0u}}) {
      HopfData d = dualize(build_coordinate_hopf(p, r, s));
      GeneratorSet gs = truncated_iso_check(d, p, r, s);
      auto f = FiniteField::prime(p);
      TruncatedAlgebra alg(p, r + s, f);
      auto rel = alg.zero();
      for (std::size_t i = 1; i < alg.dim(); ++i) rel[i] = Elem(rng() % p);
      auto m = presentation_cokernel(p, r + s, f, Presentation{1, {{rel}}});
      auto t = tensor(free_module(p, r + s, 1, f), m, d, gs);
      CHECK(validate_module(t).ok);
      CHECK(t.dim == alg.dim() * m.dim);
      CHECK(radical_top_test(t).status == Status::projective);
    }
  }
}

TEST_CASE("scalar extension and submodules") {
  auto f2 = FiniteField::prime(2), f4 = FiniteField::extension(2, 2u);
  auto m = free_module(2, 2, 1, f2);
  auto e = extend_scalars(m, f4);
  CHECK(e.field->order() == 4);
  CHECK(e.actions[0].data() == m.actions[0].data());
  // radical of A_2 as a submodule
  Mat basis(f2, 4, 3);
  basis(1, 0) = basis(2, 1) = basis(3, 2) = 1;
  auto rad = submodule(m, basis);
  CHECK(rad.dim == 3);
  CHECK(validate_module(rad).ok);
  CHECK(rank(rad.actions[0]) == 1);
  Mat not_stable(f2, 4, 1);
  not_stable(0, 0) = 1;
  CHECK_THROWS_AS(submodule(m, not_stable), InputError);
}

TEST_CASE("algebra helpers") {
  auto f3 = FiniteField::prime(3);
  TruncatedAlgebra a(3, 2, f3);
  auto x1 = a.generator(0), x2 = a.generator(1);
  CHECK(a.multiply(a.multiply(x1, x1), x1) == a.zero());
  CHECK(a.multiply(x1, x2) == mono(a, {1, 1}));
  CHECK(a.to_string(a.multiply(x1, x1)) == "x1^2");
  CHECK(a.shift(a.index(std::vector<unsigned>{2, 0}), 0) == a.dim());
}
