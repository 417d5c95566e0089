#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hollowgh::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kResourceCap = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct GoldenOutcome {
  std::string file;
  std::string ref;
  bool pass = false;
  std::string detail;
};

// Replays every *.json document in `dir`, sorted by file name.
std::vector<GoldenOutcome> replay_golden(const std::string& dir);
GoldenOutcome replay_golden_file(const std::string& path);

std::string default_golden_dir();

}  // namespace hollowgh::cli
