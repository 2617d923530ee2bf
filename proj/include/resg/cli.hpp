#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resg {

/// Command line surface: generate, analyze, compare, verify, export.
/// Returns 0 on success, 1 on input or usage errors, 2 when a theorem check
/// or method agreement fails.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resg
