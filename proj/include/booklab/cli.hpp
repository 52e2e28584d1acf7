#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace booklab::cli {

/// Runs one booklab command. JSON lines go to `out`, diagnostics to `err`. Exit codes:
/// 0 success, 1 usage or domain error, 2 inconclusive (cap or budget reached).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace booklab::cli
