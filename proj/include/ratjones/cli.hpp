#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratjones/classify.hpp"

namespace ratjones::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string sub;                 // jones, cf, eval-cf, canon, verify, template, classify, search
  std::vector<std::string> args;   // positional arguments
  std::string seq;                 // jones --seq
  bool knot_form = false;          // cf --knot
  std::string template_kind;       // one, two, pivot
  std::string base, ds, ms, eps, phis, seqs;
  std::int64_t max_det = 900;
  std::string format = "json";
  unsigned jobs = 0;               // 0: JONES_JOBS or hardware concurrency
  std::string out;
  bool classify = true;
  SearchBudget budget;
  bool help = false;
  std::string help_text;
};

/// Parses argv without the program name. Throws UsageError on malformed input.
Command parse_args(const std::vector<std::string>& argv);

/// Executes a parsed command; returns the process exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to exit code 1.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace ratjones::cli
