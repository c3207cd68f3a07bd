#pragma once

#include <ostream>

namespace lat2red::cli {

/// Entry point of the lat2red tool with injectable streams; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lat2red::cli
