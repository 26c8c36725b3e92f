#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "elemgs/errors.hpp"
#include "elemgs/field.hpp"
#include "elemgs/matrix.hpp"
#include "elemgs/poly.hpp"
#include "elemgs/scalar.hpp"

using namespace elemgs;

TEST_CASE("prime and extension fields satisfy the field axioms exhaustively") {
  for (auto f : {FiniteField::prime(2), FiniteField::prime(5), FiniteField::extension(2, 2u),
                 FiniteField::extension(3, 2u), FiniteField::extension(2, 3u)}) {
    const std::uint32_t q = f->order();
    for (Elem a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      CHECK(f->mul(a, 1) == a);
      if (a) CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->pow(a, q) == a);
      for (Elem b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (Elem c = 0; c < q; c += 3) CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

TEST_CASE("F_4 uses x^2+x+1 and prime residues keep their codes") {
  auto f = FiniteField::extension(2, 2u);
  CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  // w = code 2 satisfies w^2 = w + 1
  CHECK(f->mul(2, 2) == 3);
  CHECK(f->add(2, 3) == 1);
  auto f9 = FiniteField::extension(3, 2u);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(f9->mul(a, b) == (a * b) % 3);
}

TEST_CASE("field validation") {
  CHECK_THROWS_AS(FiniteField::prime(4), InputError);
  CHECK_THROWS_AS(FiniteField::extension(2, std::vector<std::uint32_t>{1, 0, 1}), InputError);
  CHECK(is_irreducible(2, {1, 1, 0, 1}));
  CHECK_FALSE(is_irreducible(3, {2, 0, 1}));  // x^2 - 1
}

TEST_CASE("embeddings are ring homomorphisms") {
  auto f4 = FiniteField::extension(2, 2u), f16 = FiniteField::extension(2, 4u);
  auto e = embedding(f4, f16);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(e[f4->add(a, b)] == f16->add(e[a], e[b]));
      CHECK(e[f4->mul(a, b)] == f16->mul(e[a], e[b]));
    }
  CHECK_THROWS_AS(embedding(f4, FiniteField::extension(2, 3u)), InputError);
}

TEST_CASE("rank examples") {
  auto f3 = FiniteField::prime(3), f5 = FiniteField::prime(5), f2 = FiniteField::prime(2);
  CHECK(rank(Mat::identity(f3, 2)) == 2);
  CHECK(rank(Mat::from_rows(f5, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Mat::from_rows(f2, {{0, 0}, {1, 0}})) == 1);
}

TEST_CASE("mixed-field scalars are rejected") {
  auto f3 = FiniteField::prime(3), f5 = FiniteField::prime(5);
  std::vector<Scalar> entries{Scalar(f3, 1), Scalar(f5, 1), Scalar(f3, 0), Scalar(f3, 1)};
  CHECK_THROWS_AS(Mat::from_scalars(2, 2, entries), InputError);
  CHECK_THROWS_AS(Scalar(f3, 1) + Scalar(f5, 1), InputError);
}

TEST_CASE("kernel and solve against random matrices") {
  std::mt19937_64 rng(7);
  auto f = FiniteField::extension(3, 2u);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? 0 : Elem(rng() % 9);
    Mat k = kernel(m);
    CHECK(k.rows() == c);
    CHECK(k.cols() + rank(m) == c);
    CHECK((m * k).is_zero());
    std::vector<Elem> x(c);
    for (auto& e : x) e = Elem(rng() % 9);
    auto b = m.apply(x);
    auto sol = solve(m, b);
    REQUIRE(sol);
    CHECK(m.apply(*sol) == b);
  }
}

TEST_CASE("inverse") {
  auto f = FiniteField::prime(7);
  Mat m = Mat::from_rows(f, {{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
  CHECK(m * inverse(m) == Mat::identity(f, 3));
  CHECK_THROWS_AS(inverse(Mat::from_rows(f, {{1, 2}, {2, 4}})), InputError);
}

TEST_CASE("polynomial arithmetic, exact division and gcd") {
  auto f = FiniteField::prime(3);
  Poly t1 = Poly::variable(f, 2, 0), t2 = Poly::variable(f, 2, 1);
  Poly a = (t1 + t2) * (t1 - t2);
  Poly b = (t1 + t2) * (t1 * t2 + Poly::constant(f, 2, 1));
  CHECK(Poly::exact_div(a, t1 + t2) == t1 - t2);
  CHECK(gcd(a, b) == (t1 + t2).monic());
  CHECK_THROWS_AS(Poly::exact_div(t1, t2), ConsistencyError);
  RatFunc r(a, b);
  CHECK(r.den().leading_coefficient() == 1);
  CHECK(gcd(r.num(), r.den()).is_constant());
  CHECK(r * RatFunc(b) == RatFunc(a));
}

TEST_CASE("generic rank examples") {
  auto f2 = FiniteField::prime(2);
  Mat a = Mat::from_rows(f2, {{1, 0}, {0, 1}}), b = Mat::from_rows(f2, {{0, 1}, {1, 0}});
  std::vector<Mat> pair{a, b};
  CHECK(generic_rank(PolyMat::linear_combination(pair)) == 2);
  CHECK(determinant(PolyMat::linear_combination(pair)) ==
        (Poly::variable(f2, 2, 0) + Poly::variable(f2, 2, 1)) * (Poly::variable(f2, 2, 0) + Poly::variable(f2, 2, 1)));
  PolyMat z(f2, 2, 3, 3);
  CHECK(generic_rank(z) == 0);
  Mat ones = Mat::from_rows(f2, {{1, 1}, {1, 1}});
  std::vector<Mat> single{ones};
  CHECK(generic_rank(PolyMat::linear_combination(single)) == 1);
}

// Leibniz expansion, an independent oracle for Bareiss.
static Poly leibniz(const PolyMat& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Poly det(m.field(), m.nvars());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    Poly term = Poly::constant(m.field(), m.nvars(), 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * m(i, perm[i]);
    det = inversions % 2 ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

TEST_CASE("Bareiss determinant and generic rank agree with independent oracles") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto f = FiniteField::prime(p);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t n = 1 + rng() % 4, r = 1 + rng() % 4, c = 1 + rng() % 4;
      std::vector<Mat> ms;
      for (int v = 0; v < 2; ++v) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m(i, j) = (rng() % 2) ? Elem(rng() % p) : 0;
        ms.push_back(m);
      }
      PolyMat pm = PolyMat::linear_combination(ms);
      CHECK(determinant(pm) == leibniz(pm));

      std::vector<Mat> rect;
      for (int v = 0; v < 2; ++v) {
        Mat m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 2) ? Elem(rng() % p) : 0;
        rect.push_back(m);
      }
      // generic rank = max rank over points of a large enough extension
      PolyMat rm = PolyMat::linear_combination(rect);
      auto big = FiniteField::extension(p, p == 2 ? 6u : 3u);
      auto emb = embedding(f, big);
      std::size_t best = 0;
      for (int s = 0; s < 60; ++s) {
        std::vector<Elem> pt{Elem(rng() % big->order()), Elem(rng() % big->order())};
        best = std::max(best, rank(rm.specialize(pt, big, emb)));
      }
      CHECK(generic_rank(rm) == best);
    }
  }
}
