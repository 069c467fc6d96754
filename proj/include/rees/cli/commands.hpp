#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace rees::cli {

enum ExitCode : int { kOk = 0, kMathFailure = 1, kInputError = 2, kBudgetExceeded = 3 };

// Runs `reesctl <args...>` (args excludes the program name).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

// Runs every entry of <fixtures>/golden/manifest.txt and compares output and
// exit code with the golden file. Prints one PASS/FAIL line per entry.
int verify_examples(const std::filesystem::path& fixtures, std::ostream& out);

std::filesystem::path default_fixtures_dir();

}  // namespace rees::cli
