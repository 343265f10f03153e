#pragma once

#include <string>
#include <vector>

#include "vlat/json_io.hpp"

namespace vlat::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> violations;
  int exit_code = kExitClean;
  std::string error;    // set iff exit_code == kExitInputError
  std::string summary;  // one-line human summary for stderr

  Json to_json() const;
};

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Never throws; usage and input problems come back as exit code 2.
RunReport run(const std::vector<std::string>& argv);

}  // namespace vlat::cli
