#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isolab/lie.hpp"

namespace isolab::verify {

struct Options {
  std::size_t samples = 100;  // criteria 1 and 2 use this many, the rest half
  std::uint64_t seed = 7;
  lie::Orientation orientation = lie::Orientation::Positive;
  bool parallel = true;  // false runs the serial reference runner
};

struct Check {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few only
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  bool passed() const;
  std::size_t cases() const;
};

constexpr int criterion_count = 10;

/// Runs criterion `id` in 1..10. Exact checks only; a thrown exception in
/// a sample is a failure of that sample.
CriterionResult run_criterion(int id, const Options& opt);
std::vector<CriterionResult> run_all(const Options& opt);

} // namespace isolab::verify
