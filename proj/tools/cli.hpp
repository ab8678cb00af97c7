#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabent::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kValidation = 3,
  kResourceLimit = 4,
  kUnsupported = 5,
  kIo = 6,
  kInternal = 7,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalyzeArgs {
  std::string input;
  bool exact = false;
  std::size_t starts = 64;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  bool json = false;
  std::size_t dense_limit = 20;
  std::optional<std::size_t> budget;
  std::optional<bool> persistency;
  bool timing = true;
};

struct ConstructArgs {
  std::string family;  ///< css, toric or gottesman
  std::string u_path;
  std::string v_path;  ///< defaults to u_path
  std::size_t k = 0;
  std::size_t m = 0;
  std::string c_path;
  std::string output = "-";
};

struct GraphArgs {
  std::string input;
  bool json = false;
};

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err);
int cmd_graph(const GraphArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace stabent::cli
