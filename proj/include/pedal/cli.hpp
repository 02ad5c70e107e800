#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pedal {

// single-binary front end; returns the process exit code
// (0 success, 1 domain error, 2 usage error)
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pedal
