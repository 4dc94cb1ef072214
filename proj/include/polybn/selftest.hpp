#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polybn {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the ten acceptance criteria and reports each outcome honestly;
// nothing is asserted that is not recomputed on the spot.  cli_path, if
// nonempty, locates the command-line binary so the determinism
// criterion can compare byte-for-byte output across separate processes
// and --threads settings; when empty that criterion falls back to
// in-process comparisons and says so.
std::vector<CriterionResult> run_acceptance_suite(unsigned threads = 0,
                                                  const std::string& cli_path = "");

// Prints one [PASS]/[FAIL] line per criterion; returns the number of
// failures.
int print_acceptance_report(std::ostream& out,
                            const std::vector<CriterionResult>& results);

}  // namespace polybn
