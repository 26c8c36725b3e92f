#pragma once

// JSON encodings: module files, field descriptions, verdicts and extraction
// certificates. Parsing failures raise ParseError (with a byte offset) or
// InputError (well-formed JSON with the wrong shape).

#include <string>
#include <string_view>

#include "elemgs/module.hpp"
#include "elemgs/projtest.hpp"
#include "elemgs/serre.hpp"

namespace elemgs {

/// {"p":..,"n":..,"dim":..,"field":{"kind":"prime"|"ext","poly":[..]},"actions":[[[..]]]}
ModuleRep parse_module_json(std::string_view text);
std::string module_to_json(const ModuleRep& m);

ModuleRep load_module_file(const std::string& path);
void save_module_file(const ModuleRep& m, const std::string& path);

std::string field_to_json(const FieldRef& f);
std::string verdict_to_json(const Verdict& v);

std::string certificate_to_json(const ExtractionCertificate& cert);
/// Rebuilds the context from the recorded (p, r, s, field) and re-parses the elements.
ExtractionCertificate certificate_from_json(std::string_view text);

}  // namespace elemgs
