#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace structura::cli {

  // Exit codes: a stable contract for scripts and tests.
  inline constexpr int exit_ok       = 0;
  inline constexpr int exit_failure  = 1;  // invalid structure, non-uniqueness, unsound oracle
  inline constexpr int exit_usage    = 2;  // bad flags, parse or resolution errors, exceeded bounds

  // Runs `structura <args...>` (args excludes the program name).  A file
  // argument "-" reads the document from `in`.
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::istream& in);
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace structura::cli
