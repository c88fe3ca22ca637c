#ifndef ORLICZ_ACCEPTANCE_HPP
#define ORLICZ_ACCEPTANCE_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace orlicz {

struct AcceptanceOptions {
  std::string out_dir = "acceptance_out";
  std::uint64_t seed = 20240917;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// One pass over criteria 1..9; CSVs are written into opts.out_dir.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// Runs the suite twice (out_dir/run1, out_dir/run2), adds criterion 10
/// (byte-identical CSVs, time budget) and prints one line per criterion.
/// Returns 0 when every criterion passes.
int run_acceptance_suite(const AcceptanceOptions& opts, std::ostream& out);

}  // namespace orlicz

#endif
