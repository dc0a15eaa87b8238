#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace berezin::cli {

enum ExitCode : int
{
	Ok = 0,
	ResidualNonzero = 1,
	InputError = 2,
};

/// Runs one invocation; args excludes the program name. Output is deterministic.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace berezin::cli
