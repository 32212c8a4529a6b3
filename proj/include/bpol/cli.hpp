// Command-line front end: parsing, construction, verification and export.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpol {

// Dispatches one invocation. Exit codes: 0 ok, 1 verification failure,
// 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace bpol
