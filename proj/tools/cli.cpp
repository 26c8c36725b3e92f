#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "elemgs/cohomology.hpp"
#include "elemgs/corpus.hpp"
#include "elemgs/errors.hpp"
#include "elemgs/hopf.hpp"
#include "elemgs/io.hpp"
#include "elemgs/projtest.hpp"
#include "elemgs/resolution.hpp"
#include "elemgs/serre.hpp"
#include "json.hpp"

namespace elemgs::cli {

namespace {

using nlohmann::json;

struct RingOptions {
  std::uint32_t p = 0;
  unsigned r = 0, s = 0;
  unsigned field_degree = 1;

  void add_to(CLI::App* app) {
    app->add_option("--p", p, "characteristic")->required();
    app->add_option("--r", r, "height of the Frobenius kernel factor")->required();
    app->add_option("--s", s, "rank of the elementary abelian factor")->required();
    app->add_option("--field-degree", field_degree, "work over F_{p^k}")->default_val(1);
  }
  FieldRef field() const {
    if (!is_prime(p)) throw InputError("--p must be a prime");
    if (field_degree == 0) throw InputError("--field-degree must be positive");
    return field_degree == 1 ? FiniteField::prime(p) : FiniteField::extension(p, field_degree);
  }
  CohContextRef context() const { return make_context(p, r, s, field()); }
};

std::string echo(const std::vector<std::string>& args) {
  std::string s = "elemgs";
  for (const auto& a : args) s += " " + a;
  return s;
}

int status_exit(Status s) {
  switch (s) {
    case Status::projective: return ok;
    case Status::not_projective: return not_projective;
    default: return inconclusive;
  }
}

std::string describe(const Verdict& v) {
  std::string s = v.method + ": " + status_name(v.status);
  if (v.witness) {
    const Witness& w = *v.witness;
    switch (w.kind) {
      case Witness::Kind::point: {
        s += " (non-free at c = [";
        for (std::size_t i = 0; i < w.c.size(); ++i) {
          if (i) s += ", ";
          if (w.field->is_prime_field()) {
            s += std::to_string(w.c[i]);
          } else {
            auto co = w.field->coefficients(w.c[i]);
            s += "(";
            for (std::size_t j = 0; j < co.size(); ++j) s += (j ? "," : "") + std::to_string(co[j]);
            s += ")";
          }
        }
        s += "] over an extension of degree " + std::to_string(w.ext) + ")";
        break;
      }
      case Witness::Kind::dimension:
        s += " (dim " + std::to_string(w.observed) + " vs required " + std::to_string(w.expected) + ")";
        break;
      case Witness::Kind::cohomology: s += " (dim Ext^1(k,M) = " + std::to_string(w.observed) + ")"; break;
    }
  }
  if (!v.note.empty()) s += " [" + v.note + "]";
  return s;
}

int cmd_projtest(const std::vector<std::string>& args, const std::string& file, const std::string& method,
                 unsigned ext_deg, bool as_json, std::ostream& out, std::ostream& err) {
  ModuleRep m = load_module_file(file);
  std::vector<Verdict> verdicts;
  if (method == "direct" || method == "all") verdicts.push_back(radical_top_test(m));
  if (method == "dade" || method == "all") verdicts.push_back(dade_scan(m, ext_deg));
  if (method == "h1" || method == "all") verdicts.push_back(h1_projectivity(m));

  std::optional<Status> decided;
  bool disagree = false;
  for (const auto& v : verdicts) {
    if (v.status == Status::inconclusive) continue;
    if (decided && *decided != v.status) disagree = true;
    decided = v.status;
  }
  bool any_inconclusive =
      std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::inconclusive; });
  int code = disagree ? internal_error : (!decided ? inconclusive : status_exit(*decided));
  std::string overall = disagree ? "disagreement" : (!decided ? "inconclusive" : status_name(*decided));

  if (as_json) {
    json j;
    j["command"] = echo(args);
    j["config"] = {{"method", method}, {"ext_degree", ext_deg}};
    j["module"] = {{"p", m.p}, {"n", m.n}, {"dim", m.dim}, {"field", json::parse(field_to_json(m.field))}};
    json vs = json::array();
    for (const auto& v : verdicts) vs.push_back(json::parse(verdict_to_json(v)));
    j["verdicts"] = vs;
    j["status"] = overall;
    j["partially_inconclusive"] = any_inconclusive && decided.has_value();
    j["exit_status"] = code;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& v : verdicts) out << describe(v) << '\n';
    out << "status: " << overall << '\n';
  }
  if (disagree) err << "error: detectors disagree; this indicates an implementation bug\n";
  return code;
}

int cmd_serre(const std::vector<std::string>& args, const RingOptions& ro, const std::string& element,
              unsigned max_degree, unsigned max_forms, bool as_json, std::ostream& out) {
  auto ctx = ro.context();
  CohElement u = parse_element(ctx, element);
  unsigned cap = max_degree ? max_degree : default_degree_cap(ro.p);
  auto ideal = std::make_unique<GradedIdealSpan>(ctx, std::vector<CohElement>{u}, cap);
  ExtractionCertificate cert = serre3_extract(*ideal, u, max_forms);
  if (as_json) {
    json j;
    j["command"] = echo(args);
    j["config"] = {{"max_degree", cap}, {"max_forms", max_forms}};
    j["certificate"] = json::parse(certificate_to_json(cert));
    j["exit_status"] = 0;
    out << j.dump(2) << '\n';
  } else {
    out << "branch: " << cert.branch << '\n';
    out << "steps:";
    for (const auto& s : cert.steps) out << ' ' << s.name();
    out << '\n';
    out << "final: " << format_element(cert.final_element) << '\n';
    out << "m: " << cert.m << '\n';
    out << "forms:";
    for (const auto& f : cert.forms) out << " [" << format_element(f) << ']';
    out << '\n';
    out << "product: " << format_element(cert.product) << '\n';
    out << "verified: " << (cert.verified ? "yes" : "no") << '\n';
  }
  return ok;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int cmd_betti(const std::vector<std::string>& args, const RingOptions& ro, unsigned length, bool as_json,
              std::ostream& out) {
  std::size_t n = ro.r + ro.s;
  if (n == 0) throw InputError("r + s must be positive");
  auto res = minimal_resolution(trivial_module(ro.p, n, ro.field()), length);
  std::vector<std::uint64_t> expected;
  for (std::size_t i = 0; i <= length; ++i) expected.push_back(binomial(i + n - 1, n - 1));
  bool match = std::equal(res.betti.begin(), res.betti.end(), expected.begin(), expected.end());
  if (as_json) {
    json j;
    j["command"] = echo(args);
    j["betti"] = res.betti;
    j["poincare"] = expected;
    j["match"] = match;
    j["exit_status"] = match ? 0 : int(internal_error);
    out << j.dump(2) << '\n';
  } else {
    out << "betti:";
    for (auto b : res.betti) out << ' ' << b;
    out << "\npoincare:";
    for (auto b : expected) out << ' ' << b;
    out << "\nmatch: " << (match ? "yes" : "no") << '\n';
  }
  return match ? ok : internal_error;
}

json axioms_json(const AxiomReport& a) {
  return {{"associative", a.associative}, {"unital", a.unital},           {"coassociative", a.coassociative},
          {"counital", a.counital},       {"bialgebra", a.bialgebra},     {"antipode", a.antipode},
          {"commutative", a.commutative}, {"cocommutative", a.cocommutative}, {"failures", a.failures}};
}

int cmd_hopf(const std::vector<std::string>& args, const RingOptions& ro, bool check, bool as_json,
             std::ostream& out) {
  HopfData h = build_coordinate_hopf(ro.p, ro.r, ro.s, ro.field());
  HopfData d = dualize(h);
  json j;
  j["command"] = echo(args);
  j["dim"] = d.dim;
  bool good = true;
  if (check) {
    AxiomReport ah = check_axioms(h), ad = check_axioms(d);
    j["coordinate_algebra"] = axioms_json(ah);
    j["dual"] = axioms_json(ad);
    good = ah.hopf() && ad.hopf() && ah.commutative && ad.commutative;
    try {
      GeneratorSet g = truncated_iso_check(d, ro.p, ro.r, ro.s);
      j["generators"] = g.names;
      j["truncated_polynomial"] = true;
    } catch (const ConsistencyError& e) {
      j["truncated_polynomial"] = false;
      j["truncated_polynomial_failure"] = e.what();
      good = false;
    }
  }
  j["exit_status"] = good ? 0 : int(internal_error);
  if (as_json) {
    out << j.dump(2) << '\n';
  } else {
    out << "dual dimension: " << d.dim << '\n';
    if (check) {
      auto line = [&](const char* name, const json& a) {
        out << name << ":";
        for (const char* key : {"associative", "unital", "coassociative", "counital", "bialgebra", "antipode",
                                "commutative", "cocommutative"})
          out << ' ' << key << '=' << (a[key].get<bool>() ? "yes" : "no");
        out << '\n';
      };
      line("coordinate algebra", j["coordinate_algebra"]);
      line("dual", j["dual"]);
      out << "truncated polynomial: " << (j["truncated_polynomial"].get<bool>() ? "yes" : "no");
      if (j.contains("generators"))
        for (const auto& g : j["generators"]) out << ' ' << g.get<std::string>();
      out << '\n';
    }
  }
  return good ? ok : internal_error;
}

int cmd_steenrod(const std::vector<std::string>& args, const RingOptions& ro, const std::string& op,
                 const std::string& element, bool as_json, std::ostream& out) {
  auto ctx = ro.context();
  OperationId id = OperationId::parse(op);
  CohElement a = parse_element(ctx, element);
  CohElement b = steenrod_apply(id, a);
  if (as_json) {
    json j = {{"command", echo(args)}, {"op", id.name()}, {"input", format_element(a)},
              {"output", format_element(b)}, {"exit_status", 0}};
    out << j.dump(2) << '\n';
  } else {
    out << format_element(b) << '\n';
  }
  return ok;
}

int cmd_corpus(const std::vector<std::string>& args, std::size_t count, std::uint64_t seed, unsigned ext_deg,
               unsigned threads, bool timing, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  auto corpus = random_corpus(count, seed);
  auto rows = run_agreement_suite(corpus, ext_deg, threads);
  std::size_t projective = 0, disagreements = 0, inconclusive_rows = 0;
  json items = json::array();
  for (const auto& r : rows) {
    projective += r.direct.status == Status::projective;
    disagreements += !r.agree();
    inconclusive_rows += r.any_inconclusive();
    items.push_back({{"index", r.index},
                     {"p", r.p},
                     {"n", r.n},
                     {"dim", r.dim},
                     {"direct", json::parse(verdict_to_json(r.direct))},
                     {"h1", json::parse(verdict_to_json(r.h1))},
                     {"dade", json::parse(verdict_to_json(r.dade))},
                     {"agree", r.agree()}});
  }
  int code = disagreements ? int(internal_error) : (inconclusive_rows ? int(inconclusive) : int(ok));
  json j;
  j["command"] = echo(args);
  j["config"] = {{"seed", seed}, {"count", count}, {"ext_degree", ext_deg}};
  j["items"] = items;
  j["summary"] = {{"projective", projective},
                  {"not_projective", rows.size() - projective},
                  {"disagreements", disagreements},
                  {"inconclusive", inconclusive_rows}};
  if (timing)
    j["timing_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  j["exit_status"] = code;
  out << j.dump(2) << '\n';
  return code;
}

std::uint64_t env_seed() {
  const char* s = std::getenv("ELEM_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError("ELEM_SEED must be a nonnegative integer");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projectivity tests and Steenrod-stable ideals for elementary group schemes", "elemgs"};
  app.require_subcommand(1);

  std::string module_file, method = "all";
  unsigned ext_deg = 2;
  bool as_json = false;
  auto* projtest = app.add_subcommand("projtest", "decide projectivity of a module file");
  projtest->add_option("--module", module_file, "module JSON file")->required();
  projtest->add_option("--method", method, "direct, dade, h1 or all")
      ->check(CLI::IsMember({"direct", "dade", "h1", "all"}));
  projtest->add_option("--ext-deg", ext_deg, "largest relative extension degree for the Dade scan");
  projtest->add_flag("--json", as_json, "emit a JSON report");

  RingOptions serre_ring;
  std::string element;
  unsigned max_degree = 0, max_forms = 16;
  auto* serre = app.add_subcommand("serre", "extraction procedures on Steenrod-stable ideals");
  serre->require_subcommand(1);
  auto* extract = serre->add_subcommand("extract", "x_r^m * prod u_i inside the stable ideal generated by u");
  serre_ring.add_to(extract);
  extract->add_option("--element", element, "degree-2 class u")->required();
  extract->add_option("--max-degree", max_degree, "degree cap (default 2p^2+2p+4)");
  extract->add_option("--max-forms", max_forms, "cap on the number of linear forms");
  extract->add_flag("--json", as_json, "emit a JSON report");

  RingOptions betti_ring;
  unsigned length = 4;
  auto* betti = app.add_subcommand("betti", "Betti numbers of the minimal resolution of k");
  betti_ring.add_to(betti);
  betti->add_option("--length", length, "resolution length")->required();
  betti->add_flag("--json", as_json, "emit a JSON report");

  RingOptions hopf_ring;
  bool check = false;
  auto* hopf = app.add_subcommand("hopf", "coordinate Hopf algebras");
  hopf->require_subcommand(1);
  auto* dual = hopf->add_subcommand("dualize", "dualize k[E_{r,s}]");
  hopf_ring.add_to(dual);
  dual->add_flag("--check", check, "check all Hopf axioms and the truncated polynomial structure");
  dual->add_flag("--json", as_json, "emit a JSON report");

  RingOptions st_ring;
  std::string op;
  auto* steenrod = app.add_subcommand("steenrod", "apply a Steenrod operation");
  st_ring.add_to(steenrod);
  steenrod->add_option("--op", op, "P<j>, bP<j> or Sq<j>")->required();
  steenrod->add_option("--element", element, "cohomology class")->required();
  steenrod->add_flag("--json", as_json, "emit a JSON report");

  std::size_t count = 200;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  bool timing = false;
  auto* corpus = app.add_subcommand("corpus", "three-way detector agreement on a seeded random corpus");
  corpus->add_option("--count", count, "number of modules");
  corpus->add_option("--seed", seed, "seed (default: ELEM_SEED or 0)");
  corpus->add_option("--ext-deg", ext_deg, "largest relative extension degree for the Dade scan");
  corpus->add_option("--threads", threads, "worker threads (0 = hardware)");
  corpus->add_flag("--timing", timing, "include wall-clock time in the report");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }

  try {
    if (projtest->parsed()) return cmd_projtest(args, module_file, method, ext_deg, as_json, out, err);
    if (extract->parsed()) return cmd_serre(args, serre_ring, element, max_degree, max_forms, as_json, out);
    if (betti->parsed()) return cmd_betti(args, betti_ring, length, as_json, out);
    if (dual->parsed()) return cmd_hopf(args, hopf_ring, check, as_json, out);
    if (steenrod->parsed()) return cmd_steenrod(args, st_ring, op, element, as_json, out);
    if (corpus->parsed()) return cmd_corpus(args, count, seed ? *seed : env_seed(), ext_deg, threads, timing, out);
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what();
    if (e.needed_cap()) err << " (needs a cap of at least " << e.needed_cap() << ")";
    err << '\n';
    return inconclusive;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
  err << "error: no command given\n";
  return input_error;
}

}  // namespace elemgs::cli
