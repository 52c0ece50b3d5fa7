#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dtcert/arith.hpp"

namespace dtcert::cli {

enum ExitCode : int {
  kCertified = 0,
  kNotCertified = 1,
  kInvalidInput = 2,
  kIoFailure = 3,
  kDefect = 4,  // two independent computations disagreed
};

/// Parses "p,q,r".
Triple parse_triple(const std::string& text);

/// Entry point of the `dtcert` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtcert::cli
