#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace logres {

constexpr std::uint64_t kDefaultSeed = 20170601;

/// Exit codes: 0 verified, 1 a check failed, 2 usage error.
/// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logres
