#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatpoints {

// Exit codes (stable contract):
//   0 success
//   2 malformed input (bad scheme file, bad type string, bad flags)
//   3 a required alpha was not found below the degree cap
//   4 certificate search inconclusive, or certificate verification false
//   5 table run finished with at least one Failed check
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatpoints
