// Command-line front end. Kept as a library so tests can drive it without
// spawning processes.

#ifndef SUPERCHAR_TOOLS_CLI_HPP_
#define SUPERCHAR_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace superchar::cli {

enum ExitCode : int { kOk = 0, kTheoremFailure = 1, kUsage = 2 };

struct CliConfig {
  std::string command;  // chartab | enumerate | analyze | verify
  std::vector<std::string> groups;
  std::string catalog;
  std::string sct = "finest";
  bool all_scts = false;
  std::string format = "text";
  std::string out;
  std::string table;  // ingest this character table instead of computing one
  std::size_t max_order = 64;
  unsigned jobs = 1;
};

// Parses argv into a config. Returns false after printing to `err` (or the
// help text to `out`, with `code` set to kOk) when no command should run.
bool parse_args(int argc, const char* const* argv, CliConfig& config, int& code, std::ostream& out,
                std::ostream& err);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superchar::cli

#endif  // SUPERCHAR_TOOLS_CLI_HPP_
