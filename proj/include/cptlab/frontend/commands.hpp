#pragma once

// The cptlab command line. run_cli takes the arguments after the program name
// and returns the process exit code:
//   0 pass, 1 fail, 2 not applicable, 3 usage or parse error.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cptlab/theories.hpp"

namespace cptlab::frontend {

inline constexpr int exit_usage = 3;

nlohmann::ordered_json report_json(const TheoryReport& r);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cptlab::frontend
