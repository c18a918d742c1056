#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rctrs {

/// Entry point of the `rctrs` tool; `args` excludes the program name.
/// Returns 0 on success, 1 when an analysis check fails, 2 on usage or
/// input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rctrs
