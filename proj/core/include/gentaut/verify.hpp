#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gentaut {

/// Outcome of one oracle comparison family.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first mismatch, empty on success
};

/// Runs every closed-form-versus-oracle comparison up to degree max_n
/// (1 <= max_n <= 7):
///   cosets      coset counts against multinomials and the p-recurrences
///   characters  Murnaghan-Nakayama against the brute-force table (m <= 6),
///               orthogonality and sum of squared dimensions
///   rectangular standard_tensor_multiplicity == 1 iff rectangular
///   rank        closed-form R against the trace oracle, all reps, ranks 1..3
///   generating  coefficient extraction against per-composition c1
///   regular     the regular-representation checksum
/// Results come back in this fixed order. Throws SizeError outside range.
std::vector<CheckResult> run_verification(int max_n);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gentaut
