#include "elemgs/io.hpp"

#include <fstream>
#include <sstream>

#include "elemgs/errors.hpp"
#include "json.hpp"

namespace elemgs {

using nlohmann::json;

namespace {

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("key \"") + key + "\" has the wrong type");
  }
}

json field_json(const FieldRef& f) {
  if (f->is_prime_field()) return {{"kind", "prime"}};
  return {{"kind", "ext"}, {"poly", f->modulus()}};
}

FieldRef field_from(std::uint32_t p, const json& j) {
  if (!j.is_object()) throw InputError("\"field\" must be an object");
  auto kind = get_field<std::string>(j, "kind");
  if (kind == "prime") return FiniteField::prime(p);
  if (kind == "ext") return FiniteField::extension(p, get_field<std::vector<std::uint32_t>>(j, "poly"));
  throw InputError("unknown field kind \"" + kind + "\"");
}

json scalar_json(const FiniteField& f, Elem e) {
  if (f.is_prime_field()) return e;
  return f.coefficients(e);
}

Elem scalar_from(const FiniteField& f, const json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    return f.from_int(v);
  }
  if (j.is_array()) {
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw InputError("coefficient vectors must contain integers");
      auto v = x.get<std::int64_t>();
      auto p = std::int64_t(f.characteristic());
      c.push_back(std::uint32_t(((v % p) + p) % p));
    }
    if (c.size() > f.degree()) throw InputError("coefficient vector longer than the field degree");
    return f.from_coefficients(c);
  }
  throw InputError("matrix entries must be integers or coefficient vectors");
}

json element_field_header(const CohContext& c) {
  return {{"p", c.p}, {"r", c.r}, {"s", c.s}, {"field", field_json(c.field)}};
}

}  // namespace

ModuleRep parse_module_json(std::string_view text) {
  json j = parse_text(text);
  ModuleRep m;
  auto p = get_field<std::int64_t>(j, "p");
  if (p < 2 || !is_prime(std::uint64_t(p))) throw InputError("\"p\" must be a prime");
  m.p = std::uint32_t(p);
  auto n = get_field<std::int64_t>(j, "n");
  auto dim = get_field<std::int64_t>(j, "dim");
  if (n < 0 || dim < 0) throw InputError("\"n\" and \"dim\" must be nonnegative");
  m.n = std::size_t(n);
  m.dim = std::size_t(dim);
  m.field = j.contains("field") ? field_from(m.p, j.at("field")) : FiniteField::prime(m.p);
  const json& acts = j.contains("actions") ? j.at("actions") : json();
  if (!acts.is_array() || acts.size() != m.n) throw InputError("\"actions\" must hold n matrices");
  for (std::size_t i = 0; i < m.n; ++i) {
    const json& a = acts[i];
    if (!a.is_array() || a.size() != m.dim) throw InputError("action " + std::to_string(i + 1) + " must have dim rows");
    Mat x(m.field, m.dim, m.dim);
    for (std::size_t r = 0; r < m.dim; ++r) {
      if (!a[r].is_array() || a[r].size() != m.dim)
        throw InputError("action " + std::to_string(i + 1) + " row " + std::to_string(r) + " must have dim entries");
      for (std::size_t c = 0; c < m.dim; ++c) x(r, c) = scalar_from(*m.field, a[r][c]);
    }
    m.actions.push_back(std::move(x));
  }
  auto report = validate_module(m);
  if (!report.ok) {
    std::string msg = "invalid module:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw InputError(msg);
  }
  return m;
}

std::string module_to_json(const ModuleRep& m) {
  json acts = json::array();
  for (const auto& x : m.actions) {
    json rows = json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(scalar_json(*m.field, x(r, c)));
      rows.push_back(std::move(row));
    }
    acts.push_back(std::move(rows));
  }
  json j = {{"p", m.p}, {"n", m.n}, {"dim", m.dim}, {"field", field_json(m.field)}, {"actions", acts}};
  return j.dump();
}

ModuleRep load_module_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open module file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_module_json(ss.str());
}

void save_module_file(const ModuleRep& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write module file " + path);
  out << module_to_json(m) << '\n';
}

std::string field_to_json(const FieldRef& f) { return field_json(f).dump(); }

std::string verdict_to_json(const Verdict& v) {
  json j = {{"status", status_name(v.status)}, {"method", v.method}};
  if (!v.note.empty()) j["note"] = v.note;
  if (v.witness) {
    const Witness& w = *v.witness;
    json wj;
    switch (w.kind) {
      case Witness::Kind::point: {
        wj["kind"] = "point";
        json c = json::array();
        for (Elem e : w.c) c.push_back(scalar_json(*w.field, e));
        wj["c"] = c;
        wj["ext"] = w.ext;
        wj["field"] = field_json(w.field);
        break;
      }
      case Witness::Kind::dimension:
        wj = {{"kind", "dimension"}, {"observed", w.observed}, {"expected", w.expected}};
        break;
      case Witness::Kind::cohomology:
        wj = {{"kind", "cohomology"}, {"ext1_dim", w.observed}};
        break;
    }
    j["witness"] = wj;
  }
  return j.dump();
}

std::string certificate_to_json(const ExtractionCertificate& cert) {
  const CohContext& c = *cert.initial.context();
  json j = element_field_header(c);
  j["initial"] = format_element(cert.initial);
  json steps = json::array();
  for (const auto& s : cert.steps) steps.push_back(s.name());
  j["steps"] = steps;
  j["final"] = format_element(cert.final_element);
  j["m"] = cert.m;
  json forms = json::array();
  for (const auto& f : cert.forms) forms.push_back(format_element(f));
  j["forms"] = forms;
  j["product"] = format_element(cert.product);
  j["branch"] = cert.branch;
  j["verified"] = cert.verified;
  j["final_proportional_to_product"] = cert.final_proportional_to_product;
  return j.dump();
}

ExtractionCertificate certificate_from_json(std::string_view text) {
  json j = parse_text(text);
  auto p = get_field<std::uint32_t>(j, "p");
  auto r = get_field<unsigned>(j, "r");
  auto s = get_field<unsigned>(j, "s");
  if (!is_prime(p)) throw InputError("\"p\" must be a prime");
  FieldRef f = j.contains("field") ? field_from(p, j.at("field")) : FiniteField::prime(p);
  auto ctx = make_context(p, r, s, f);
  ExtractionCertificate cert(ctx);
  cert.initial = parse_element(ctx, get_field<std::string>(j, "initial"));
  for (const auto& name : get_field<std::vector<std::string>>(j, "steps")) cert.steps.push_back(CertificateStep::parse(name));
  cert.final_element = parse_element(ctx, get_field<std::string>(j, "final"));
  cert.m = get_field<unsigned>(j, "m");
  for (const auto& form : get_field<std::vector<std::string>>(j, "forms")) cert.forms.push_back(parse_element(ctx, form));
  cert.product = parse_element(ctx, get_field<std::string>(j, "product"));
  cert.branch = get_field<std::string>(j, "branch");
  cert.verified = get_field<bool>(j, "verified");
  cert.final_proportional_to_product = get_field<bool>(j, "final_proportional_to_product");
  return cert;
}

}  // namespace elemgs
