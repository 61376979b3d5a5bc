#pragma once

#include <string>
#include <vector>

namespace ep::verify {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs every acceptance criterion in order. threads feeds the prime sweeps.
std::vector<CriterionResult> run_acceptance(unsigned threads = 1);

/// Runs a single criterion (1-based).
CriterionResult run_criterion(int id, unsigned threads = 1);

constexpr int criterion_count = 15;

}  // namespace ep::verify
