#ifndef DEONET_CLI_HPP
#define DEONET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end. Exit codes: 0 success, 1 semantic failure
// (conflicts, inconsistency, unsatisfied norms), 2 input error.

namespace deonet {

enum class Command {
  Parse,       // echo validated norms in canonical form
  Compile,     // net (text / structured / dot dependency graph)
  Graph,       // induced preorder (text / structured / dot)
  Dominance,   // <outcome> <outcome>
  Consistent,
  Permission,  // <lit> [IF <lit> [AND <lit>]...]
  Ctd,
  Check,       // compile + build + check every norm
  Optima
};

enum class OutputFormat { Text, Structured, Dot };

struct RunConfig {
  Command command = Command::Parse;
  std::string input_path;
  int cap = 0;  // 0: take DEONET_CAP from the environment, else the default
  OutputFormat format = OutputFormat::Text;
  bool merge_indifference = false;
  std::vector<std::string> args;  // outcomes / permission query words
};

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front end (CLI11); returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace deonet

#endif
