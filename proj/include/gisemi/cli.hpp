#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gisemi::cli {

  // Exit statuses.
  inline constexpr int ok           = 0;
  inline constexpr int domain_error = 1;
  inline constexpr int parse_error  = 2;

  // Runs one command; args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace gisemi::cli
