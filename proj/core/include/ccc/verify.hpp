#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccc {

struct CheckOutcome {
  std::string id;     // "1".."12"
  std::string topic;  // hall, sym, gl2, split, counterexample, frobenius, centre
  std::string claim;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::string only;  // empty = everything; otherwise match against topic/id
  std::vector<int> gl2_brute_q{3, 5, 7};
  std::vector<int> sl2_matching_q{3, 5, 7, 9, 11};
  std::uint64_t seed = 0;
  int sym_crosscheck_max = 8;
  int counting_max = 60;
  int table_formula_max = 31;
};

// Runs the full one-shot verification suite over the built-in catalog; one
// outcome per verified claim. Failures are reported, never thrown.
std::vector<CheckOutcome> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckOutcome>& outcomes);

}  // namespace ccc
