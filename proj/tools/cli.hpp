#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elemgs::cli {

/// Exit codes: 0 success (projtest: projective), 1 projtest: not projective,
/// 2 inconclusive, 3 input error, 4 internal consistency failure.
enum ExitCode : int { ok = 0, not_projective = 1, inconclusive = 2, input_error = 3, internal_error = 4 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elemgs::cli
