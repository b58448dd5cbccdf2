#pragma once
// One-shot property suite behind `weylgale verify`.

#include <string>
#include <vector>

namespace weylgale {

struct SuiteOptions {
  int n = 5;          // target dimension for the chamber graph run
  int k = 9;          // number of points for the chamber graph run
  int budget = 100;   // chamber graph node cap
  unsigned seed = 0;
  int trials = 200;   // random words / random classes per property
};

struct SuiteResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<SuiteResult> run_verification_suite(const SuiteOptions& opt);

}  // namespace weylgale
