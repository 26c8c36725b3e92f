#include <doctest.h>

#include <cstdio>
#include <random>
#include <string>

#include "elemgs/corpus.hpp"
#include "elemgs/errors.hpp"
#include "elemgs/io.hpp"
#include "elemgs/resolution.hpp"

using namespace elemgs;

TEST_CASE("module files round trip") {
  auto f4 = FiniteField::extension(2, 2u);
  std::vector<ModuleRep> mods{trivial_module(2, 2, FiniteField::prime(2)), free_module(3, 2, 1, FiniteField::prime(3)),
                              extend_scalars(free_module(2, 2, 1, FiniteField::prime(2)), f4),
                              carlson_kernel({1, 1, 1})};
  for (const auto& item : random_corpus(20, 9)) mods.push_back(item.module);
  for (const auto& m : mods) CHECK(parse_module_json(module_to_json(m)) == m);

  std::string path = "test_io_roundtrip.json";
  save_module_file(mods[1], path);
  CHECK(load_module_file(path) == mods[1]);
  std::remove(path.c_str());
}

TEST_CASE("module file format details") {
  auto m = parse_module_json(R"({"p":2,"n":2,"dim":2,"field":{"kind":"prime"},
      "actions":[[[0,0],[0,0]],[[0,0],[1,0]]]})");
  CHECK(m.dim == 2);
  CHECK(m.actions[1](1, 0) == 1);
  auto e = parse_module_json(R"({"p":2,"n":1,"dim":2,"field":{"kind":"ext","poly":[1,1,1]},
      "actions":[[[0,0],[[0,1],0]]]})");
  CHECK(e.field->order() == 4);
  CHECK(e.actions[0](1, 0) == 2);
}

TEST_CASE("malformed module files") {
  try {
    parse_module_json(R"({"p":2,"n":1,)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  CHECK_THROWS_AS(parse_module_json(R"({"p":4,"n":0,"dim":0,"actions":[]})"), InputError);
  CHECK_THROWS_AS(parse_module_json(R"({"p":2,"n":1,"dim":2,"actions":[[[0,0]]]})"), InputError);
  // x^2 != 0 for a 3x3 Jordan block at p = 2
  CHECK_THROWS_AS(parse_module_json(R"({"p":2,"n":1,"dim":3,"actions":[[[0,0,0],[1,0,0],[0,1,0]]]})"), InputError);
  CHECK_THROWS_AS(load_module_file("/nonexistent/module.json"), InputError);
}

TEST_CASE("verdict json") {
  FieldRef f2 = FiniteField::prime(2);
  Presentation pres;
  pres.generators = 1;
  TruncatedAlgebra alg(2, 2, f2);
  pres.relations.push_back({alg.generator(0)});
  auto m = presentation_cokernel(2, 2, f2, pres);
  auto v = dade_scan(m, 2);
  CHECK(verdict_to_json(v).find(R"("c":[1,0])") != std::string::npos);
  CHECK(verdict_to_json(v).find(R"("ext":1)") != std::string::npos);
  CHECK(verdict_to_json(radical_top_test(m)).find("not_projective") != std::string::npos);
}

TEST_CASE("certificates round trip through json") {
  auto c = make_context(3, 1, 1);
  auto u = parse_element(c, "l1*y1");
  auto I = steenrod_closure({u}, default_degree_cap(3));
  auto cert = serre3_extract(*I, u);
  auto text = certificate_to_json(cert);
  auto back = certificate_from_json(text);
  CHECK(back.initial == cert.initial);
  CHECK(back.final_element == cert.final_element);
  CHECK(back.m == cert.m);
  CHECK(back.steps.size() == cert.steps.size());
  CHECK(verify_certificate(back, *I));
  CHECK(certificate_to_json(back) == text);
}
