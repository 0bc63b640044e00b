#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdepth/exact_rank.hpp"
#include "sdepth/monomial.hpp"

namespace sdepth {

// Batch harness: over a family of pairs (I, u regular on S/I) it checks the
// reduction identities for sdepth and depth, the pretty clean biconditional,
// Supp = Ass on every pretty clean filtration it finds, and sdepth >= depth
// whenever a pretty clean filtration exists. Zero failures expected.
struct ScanConfig {
  enum class Mode { exhaustive_squarefree, random_box };

  Mode mode = Mode::exhaustive_squarefree;
  int n_max = 3;
  int exponent_max = 2;
  int sample_count = 200;           // random_box only
  unsigned long long seed = 1;
  CoefficientField field = CoefficientField::rationals();
  long long timeout_ms = 0;         // per instance; 0 disables
};

struct ScanFailure {
  std::string check;
  std::string instance;  // problem document, verbatim
  std::string detail;
};

struct ScanReport {
  long long instances = 0;
  long long skipped = 0;  // instances with no regular monomial available
  std::map<std::string, long long> checks;  // check name -> times run
  std::vector<ScanFailure> failures;

  bool ok() const { return failures.empty(); }
};

ScanReport run_scan(const ScanConfig& cfg);

// The instance families, exposed for the acceptance suite.
// Every squarefree ideal in exactly n variables (deduplicated normal forms,
// the zero ideal included).
std::vector<MonomialIdeal> all_squarefree_ideals(int n);

}  // namespace sdepth
