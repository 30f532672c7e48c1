#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isolab::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, property_failed = 2, internal_error = 3 };

/// Runs one command. `args` excludes the program name. `in` is read when
/// the input file is "-". ISOLAB_SEED, when set, overrides --seed.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace isolab::cli
