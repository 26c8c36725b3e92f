#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "elemgs/io.hpp"
#include "elemgs/resolution.hpp"
#include "json.hpp"

using namespace elemgs;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::FILE* f = std::fopen(name.c_str(), "w");
  std::fputs(text.c_str(), f);
  std::fclose(f);
  return name;
}

}  // namespace

TEST_CASE("steenrod subcommand") {
  auto r = run({"steenrod", "--p", "3", "--r", "2", "--s", "0", "--op", "P0", "--element", "x1"});
  CHECK(r.code == 0);
  CHECK(r.out == "x2\n");
  auto bad = run({"steenrod", "--p", "3", "--r", "1", "--s", "0", "--op", "P0", "--element", "x1 +* 2"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"steenrod", "--p", "3", "--r", "1", "--s", "0", "--op", "Sq1", "--element", "x1"}).code == 3);
}

TEST_CASE("projtest subcommand") {
  auto free = write_temp("cli_free.json", module_to_json(free_module(2, 2, 1, FiniteField::prime(2))));
  auto r = run({"projtest", "--module", free, "--method", "all", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["verdicts"].size() == 3);
  for (const auto& v : j["verdicts"]) CHECK(v["status"] == "projective");

  auto quot = write_temp("cli_quot.json", R"({"p":2,"n":2,"dim":2,"field":{"kind":"prime"},
      "actions":[[[0,0],[0,0]],[[0,0],[1,0]]]})");
  auto q = run({"projtest", "--module", quot, "--method", "dade", "--json"});
  CHECK(q.code == 1);
  auto qj = nlohmann::json::parse(q.out);
  CHECK(qj["verdicts"][0]["witness"]["c"] == nlohmann::json::parse("[1,0]"));
  CHECK(qj["verdicts"][0]["witness"]["ext"] == 1);
  CHECK(run({"projtest", "--module", quot}).code == 1);

  auto bad = write_temp("cli_bad.json", R"({"p":2,"n":)");
  auto b = run({"projtest", "--module", bad});
  CHECK(b.code == 3);
  CHECK(b.err.find("position") != std::string::npos);
  CHECK(run({"projtest", "--module", quot, "--method", "bogus"}).code == 3);
  CHECK(run({"projtest", "--module", "/nonexistent.json"}).code == 3);
  for (auto f : {free, quot, bad}) std::remove(f.c_str());
}

TEST_CASE("serre extract subcommand") {
  auto r = run({"serre", "extract", "--p", "3", "--r", "1", "--s", "1", "--element", "l1*y1", "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["certificate"]["m"] == 3);
  CHECK(j["certificate"]["forms"][0] == "z1");
  CHECK(j["certificate"]["verified"] == true);

  auto small = run({"serre", "extract", "--p", "3", "--r", "2", "--s", "1", "--element", "l1*l2 + l2*y1",
                    "--max-degree", "8"});
  CHECK(small.code == 2);
  CHECK(small.err.find("cap") != std::string::npos);
  CHECK(run({"serre", "extract", "--p", "3", "--r", "1", "--s", "1", "--element", "l1"}).code == 3);
}

TEST_CASE("betti and hopf subcommands") {
  auto b = run({"betti", "--p", "3", "--r", "1", "--s", "1", "--length", "4"});
  CHECK(b.code == 0);
  CHECK(b.out.find("betti: 1 2 3 4 5") != std::string::npos);
  auto h = run({"hopf", "dualize", "--p", "2", "--r", "1", "--s", "1", "--check"});
  CHECK(h.code == 0);
  CHECK(h.out.find("truncated polynomial: yes") != std::string::npos);
}

TEST_CASE("corpus subcommand is deterministic") {
  auto a = run({"corpus", "--count", "12", "--seed", "5"});
  auto b = run({"corpus", "--count", "12", "--seed", "5", "--threads", "1"});
  auto strip = [](std::string s) { return s.substr(s.find("\"config\"")); };
  CHECK(a.code == 0);
  CHECK(run({"corpus", "--count", "12", "--seed", "5"}).out == a.out);
  CHECK(strip(b.out) == strip(a.out));
  setenv("ELEM_SEED", "5", 1);
  auto c = run({"corpus", "--count", "12"});
  unsetenv("ELEM_SEED");
  CHECK(strip(c.out) == strip(a.out));
  CHECK(run({"corpus", "--count", "x"}).code == 3);
  CHECK(run({}).code == 3);
}
