#include <iostream>
#include <string>
#include <vector>

#include "vlat/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  const vlat::cli::RunReport report = vlat::cli::run(args);
  if (report.command.empty() && report.exit_code == vlat::cli::kExitClean) {
    std::cout << report.summary;
    return 0;
  }
  std::cout << report.to_json().dump(2) << '\n';
  std::cerr << report.summary << '\n';
  return report.exit_code;
}
