#ifndef HOG_CLI_HPP
#define HOG_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hog::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kVerificationFailure = 2 };

// Parsed command line. Empty strings mean "not given".
struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string words;
  std::string format = "lines";
  std::string containment = "reject";
  std::string out;
  std::string emit;
  std::string via = "hog";
  std::string alphabet;
  std::size_t z = 1;
  std::size_t z_max = 32;
  bool verify = false;
  bool debug_invariants = false;
};

// Executes one validated configuration. Words come from --words, --input,
// or `in` when neither is given.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv (program name first) and runs it.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace hog::cli

#endif  // HOG_CLI_HPP
