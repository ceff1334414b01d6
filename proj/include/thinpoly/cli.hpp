// Command-line surface. run() is the whole program behind main(), kept
// callable so tests can drive it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thinpoly {

// Exit status: 0 ok, 2 usage/parse error, 3 unsupported input,
// 4 theorem violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thinpoly
