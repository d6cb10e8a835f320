#include <csignal>
#include <iostream>

#include "ira_cli/cli.hpp"

namespace {

extern "C" void on_signal(int) { ira::cli::interrupt_flag().store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::vector<std::string> args(argv + 1, argv + argc);
  return ira::cli::run(args, std::cout, std::cerr);
}
