#pragma once

#include <string>
#include <vector>

namespace perfgrp {

struct CheckResult {
  std::string identity;
  bool passed = false;
  std::string detail;  // exception text when a check threw
};

// Regression table of the published values: divisor sums, small D(G)
// values, the S3 x C5 / A5 x C15128 / A6 x C366776 constructions and the
// structural identities around them.
std::vector<CheckResult> run_paper_checks();

}  // namespace perfgrp
