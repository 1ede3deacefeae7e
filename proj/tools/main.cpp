#include <iostream>
#include <string>
#include <vector>

#include "ixcli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  ix::cli::Report report = ix::cli::run(args);
  ix::cli::commit_outputs(report);
  std::cout << report.render();
  return report.exit_code();
}
