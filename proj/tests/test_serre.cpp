#include <doctest.h>

#include <algorithm>
#include <random>

#include "elemgs/errors.hpp"
#include "elemgs/serre.hpp"

using namespace elemgs;

namespace {

using K = OperationId::Kind;

CohElement E(const CohContextRef& c, std::string_view s) { return parse_element(c, s); }

std::unique_ptr<GradedIdealSpan> closure_of(const CohContextRef& c, std::initializer_list<std::string_view> gens,
                                            unsigned cap) {
  std::vector<CohElement> g;
  for (auto s : gens) g.push_back(E(c, s));
  return steenrod_closure(g, cap);
}

std::vector<OperationId> all_ops_with_shift(std::uint32_t p, unsigned shift) {
  std::vector<OperationId> out;
  if (p == 2) {
    out.push_back({K::Sq, shift});
    return out;
  }
  unsigned q = 2 * (p - 1);
  if (shift % q == 0) out.push_back({K::P, shift / q});
  if (shift % q == 1) out.push_back({K::BP, shift / q});
  return out;
}

// re-applies ring generators and every operation to each recorded basis element
void check_closure_invariants(const GradedIdealSpan& I) {
  const CohContextRef& c = I.context();
  std::vector<CohElement> gens;
  for (std::size_t i = 0; i < c->key_size(); ++i) {
    MonomialKey k(c->key_size(), 0);
    k[i] = 1;
    gens.push_back(CohElement::monomial(c, k));
  }
  for (unsigned d = 0; d <= I.cap(); ++d)
    for (const auto& b : I.basis(d)) {
      for (const auto& g : gens)
        if (d + unsigned(*g.degree()) <= I.cap()) CHECK(I.membership(g * b).member);
      for (unsigned e = d; e <= I.cap(); ++e)
        for (const auto& op : all_ops_with_shift(c->p, e - d)) CHECK(I.membership(steenrod_apply(op, b)).member);
    }
}

CohElement random_degree_two(const CohContextRef& c, std::mt19937_64& rng) {
  auto monos = monomials_of_degree(*c, 2);
  while (true) {
    CohElement u(c);
    for (const auto& m : monos)
      if (rng() % 2) u.add_term(m, Elem(rng() % c->p));
    if (!u.is_zero()) return u;
  }
}

bool all_prime(const CohElement& a) {
  for (const auto& [k, v] : a.terms())
    if (!a.context()->field->in_prime_field(v)) return false;
  return true;
}

}  // namespace

TEST_CASE("monomials of a degree") {
  auto c = make_context(3, 1, 1);
  CHECK(monomials_of_degree(*c, 0).size() == 1);
  CHECK(monomials_of_degree(*c, 1).size() == 2);  // l1, y1
  CHECK(monomials_of_degree(*c, 2).size() == 3);  // x1, z1, l1 y1
  auto c2 = make_context(2, 1, 1);
  CHECK(monomials_of_degree(*c2, 3).size() == 4);
}

TEST_CASE("graded membership examples") {
  auto c = make_context(3, 0, 2);
  auto I = closure_of(c, {"z1"}, 10);
  CHECK(graded_membership(*I, E(c, "z1^2")).member);
  CHECK_FALSE(graded_membership(*I, E(c, "z2")).member);
  auto m = graded_membership(*I, E(c, "z1*z2"));
  REQUIRE(m.member);
  auto basis = I->basis(4);
  CohElement rebuilt(c);
  for (std::size_t i = 0; i < basis.size(); ++i) rebuilt += basis[i].scaled(m.coordinates[i]);
  CHECK(rebuilt == E(c, "z1*z2"));
  CHECK_THROWS_AS(I->membership(E(c, "z1^6")), InconclusiveError);

  auto c11 = make_context(3, 1, 1);
  auto J = closure_of(c11, {"l1*y1"}, default_degree_cap(3));
  CHECK(J->membership(E(c11, "x1^3*z1")).member);
  CHECK_FALSE(J->membership(E(c11, "x1")).member);
}

TEST_CASE("closure examples") {
  auto c = make_context(3, 0, 1);
  auto I = closure_of(c, {"z1"}, 6);
  CHECK(I->membership(E(c, "z1^3")).member);
  auto c2 = make_context(3, 1, 1);
  auto one = closure_of(c2, {"1"}, 8);
  for (unsigned d = 0; d <= 8; ++d) CHECK(one->dimension(d) == monomials_of_degree(*c2, d).size());
  CHECK_THROWS_AS(closure_of(c2, {"x1 + l1"}, 8), InputError);
}

TEST_CASE("closure invariants hold by direct re-application") {
  std::mt19937_64 rng(11);
  for (auto c : {make_context(3, 1, 1), make_context(2, 1, 1), make_context(2, 2, 1), make_context(3, 0, 2)}) {
    std::vector<CohElement> gens{random_degree_two(c, rng)};
    auto I = steenrod_closure(gens, c->p == 2 ? 7 : 10);
    check_closure_invariants(*I);
  }
}

TEST_CASE("descent to the prime field") {
  auto f4 = FiniteField::extension(2, 2u);
  auto c = make_context(2, 0, 2, f4);
  const Elem w = 2;  // the class of the adjoined root
  CHECK(descend_to_prime_field(E(c, "z1").scaled(w)) == E(c, "z1"));
  CHECK(descend_to_prime_field(E(c, "z1") + E(c, "z2").scaled(w)) == E(c, "z2"));
  CHECK(descend_to_prime_field(E(c, "z1*z2 + z2^2")) == E(c, "z1*z2 + z2^2"));

  auto I = steenrod_closure({E(c, "z1") + E(c, "z2").scaled(w)}, 8);
  auto f = descend_to_prime_field(*I);
  CHECK_FALSE(f.is_zero());
  CHECK(all_prime(f));
  CHECK(I->membership(f).member);

  auto c9 = make_context(3, 0, 2, FiniteField::extension(3, 2u));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    CohElement g(c9);
    for (const auto& m : monomials_of_degree(*c9, 4))
      if (!c9->odd_position(0) && rng() % 2) {
        bool z_only = true;
        for (std::size_t i = 0; i < m.size(); ++i)
          if (m[i] && c9->odd_position(i)) z_only = false;
        if (z_only) g.add_term(m, Elem(rng() % 9));
      }
    if (g.is_zero()) continue;
    auto d = descend_to_prime_field(g);
    CHECK(all_prime(d));
    CHECK_FALSE(d.is_zero());
  }
}

TEST_CASE("products of linear forms") {
  auto c = make_context(3, 0, 2);
  CHECK(normalized_linear_forms(c).size() == 4);
  auto I = closure_of(c, {"z1"}, 28);
  auto f = linear_form_product_search(*I);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == E(c, "z1"));

  auto J = closure_of(c, {"z1*z2"}, 28);
  auto g = linear_form_product_search(*J);
  REQUIRE(g.size() == 2);
  CHECK(g[0] * g[1] == E(c, "z1*z2"));

  for (std::uint32_t p : {2u, 3u}) {
    auto cp = make_context(p, 0, 2);
    auto K2 = steenrod_closure({E(cp, "z1^" + std::to_string(p) + "*z2 - z1*z2^" + std::to_string(p))},
                               default_degree_cap(p));
    auto forms = linear_form_product_search(*K2);
    CHECK(forms.size() == p + 1);
    auto all = normalized_linear_forms(cp);
    CHECK(all.size() == p + 1);
    for (const auto& a : all) CHECK(std::count(forms.begin(), forms.end(), a) == 1);
    CohElement prod = CohElement::one(cp);
    for (const auto& a : forms) prod = prod * a;
    CHECK(K2->membership(prod).member);
  }

  auto small = closure_of(c, {"z1^3*z2 - z1*z2^3"}, 6);
  CHECK_THROWS_AS(linear_form_product_search(*small), InconclusiveError);
}

TEST_CASE("powers of x_r") {
  auto c = make_context(3, 2, 0);
  auto I = closure_of(c, {"x2"}, default_degree_cap(3));
  auto a = xr_power_extract(*I, E(c, "x2"));
  CHECK(a.m == 1);
  CHECK(a.steps.empty());

  auto J = closure_of(c, {"x1"}, default_degree_cap(3));
  auto b = xr_power_extract(*J, E(c, "x1"));
  CHECK(b.m == 1);
  REQUIRE(b.steps.size() == 1);
  CHECK(b.steps[0].op == OperationId{K::P, 0});

  auto L = closure_of(c, {"l1*l2"}, default_degree_cap(3));
  auto e = xr_power_extract(*L, E(c, "l1*l2"));
  CHECK(e.verified);
  CHECK(e.m == 4);
  CHECK(L->membership(E(c, "x2^4")).member);
  CHECK(replay(e.initial, e.steps) == e.final_element);

  auto c2 = make_context(2, 2, 0);
  auto L2 = closure_of(c2, {"l1*l2"}, default_degree_cap(2));
  auto e2 = xr_power_extract(*L2, E(c2, "l1*l2"));
  CHECK(e2.verified);
  CHECK(e2.m == 3);

  CHECK_THROWS_AS(xr_power_extract(*L, E(c, "x1")), InputError);
}

TEST_CASE("serre3 worked examples") {
  auto c = make_context(3, 1, 1);
  auto I = closure_of(c, {"l1*y1"}, default_degree_cap(3));
  auto cert = serre3_extract(*I, E(c, "l1*y1"));
  CHECK(cert.verified);
  CHECK(cert.m == 3);
  REQUIRE(cert.forms.size() == 1);
  CHECK(cert.forms[0] == E(c, "z1"));
  CHECK(cert.final_element == -E(c, "x1^3*z1"));
  CHECK(cert.final_proportional_to_product);
  CHECK(cert.branch == "xr-times-form");

  auto c02 = make_context(3, 0, 2);
  auto J = closure_of(c02, {"y1*y2"}, default_degree_cap(3));
  auto c2 = serre3_extract(*J, E(c02, "y1*y2"));
  CHECK(c2.branch == "product-of-forms");
  CHECK(c2.final_element == E(c02, "z1^3*z2 - z1*z2^3"));
  CHECK(c2.m == 0);
  CHECK(J->membership(c2.product).member);

  auto c10 = make_context(3, 1, 0);
  auto K1 = closure_of(c10, {"x1"}, default_degree_cap(3));
  auto c3 = serre3_extract(*K1, E(c10, "x1"));
  CHECK(c3.branch == "xr-power");
  CHECK(c3.m == 1);

  CHECK_THROWS_AS(serre3_extract(*K1, E(c10, "l1")), InputError);
  auto c11b = make_context(3, 1, 1);
  auto K2 = closure_of(c11b, {"z1"}, default_degree_cap(3));
  CHECK_THROWS_AS(serre3_extract(*K2, E(c11b, "x1")), InputError);
  auto lin = serre3_extract(*K2, E(c11b, "z1"));
  CHECK(lin.branch == "linear-form");
}

TEST_CASE("serre3 on random ideals") {
  std::mt19937_64 rng(2024);
  for (auto [p, r, s] : {std::tuple{3u, 1u, 1u}, {3u, 1u, 2u}, {2u, 1u, 1u}, {3u, 2u, 1u}, {2u, 2u, 1u}}) {
    auto c = make_context(p, r, s);
    for (int t = 0; t < 6; ++t) {
      auto u = random_degree_two(c, rng);
      auto I = steenrod_closure({u}, default_degree_cap(p));
      CAPTURE(format_element(u));
      try {
        auto cert = serre3_extract(*I, u);
        CHECK(cert.verified);
        CHECK(verify_certificate(cert, *I));
        for (const auto& f : cert.forms) CHECK_FALSE(f.is_zero());
      } catch (const InconclusiveError& e) {
        // only expected for (2,2,1), where the chain may climb past the cap
        CHECK(p == 2);
        CHECK(r == 2);
      }
    }
  }
}

TEST_CASE("certificate steps parse and print") {
  CHECK(CertificateStep::parse("bP1").name() == "bP1");
  CHECK(CertificateStep::parse("descend").kind == CertificateStep::Kind::descend);
  CHECK(CertificateStep::parse("normalize").name() == "normalize");
}
