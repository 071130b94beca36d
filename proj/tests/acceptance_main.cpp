#include "acceptance.hpp"
#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  gromon::acceptance::SuiteOptions options;
  std::string scratch = (std::filesystem::temp_directory_path() / "gromon-acceptance").string();
  CLI::App app{"Runs every acceptance criterion and prints one pass/fail line each", "acceptance"};
  app.add_option("--scratch", scratch, "directory for files written by the CLI checks");
  app.add_option("--seed", options.seed, "base seed for the random instances");
  CLI11_PARSE(app, argc, argv);

  options.scratch_dir = scratch;
  options.cli = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = gromon::cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  const auto results = gromon::acceptance::run_suite(options);
  gromon::acceptance::print_results(results, std::cout);
  return gromon::acceptance::all_passed(results) ? 0 : 1;
}
