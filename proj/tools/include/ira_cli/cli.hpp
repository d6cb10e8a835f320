#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace ira::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitRuntimeFailure = 2;

/// Runs one command line (without the program name). Never throws; the return
/// value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Set from a signal handler to stop a running sweep after the current settings.
std::atomic<bool>& interrupt_flag() noexcept;

}  // namespace ira::cli
