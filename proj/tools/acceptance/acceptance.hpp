#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gromon::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the command-line front end in-process: (exit code, stdout).
using CommandRunner = std::function<std::pair<int, std::string>(const std::vector<std::string>&)>;

struct SuiteOptions {
  CommandRunner cli;                 // needed by the determinism check
  std::filesystem::path scratch_dir;  // files written by the CLI checks
  std::uint64_t seed = 20240601;
};

std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// One "PASS|FAIL  <id>  <title>  (<detail>)" line per criterion and a summary line.
void print_results(const std::vector<CriterionResult>& results, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace gromon::acceptance
