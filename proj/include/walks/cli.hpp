#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walks::cli {

/// Exit codes: 0 success, 2 usage error, 3 enumeration guard exceeded,
/// 1 other failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walks::cli
