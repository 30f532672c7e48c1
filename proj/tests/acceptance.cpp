// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <iostream>

#include "isolab/verify.hpp"

int main() {
  using namespace isolab;
  verify::Options opt;  // 100 samples, seed 7, positive orientation
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (int id = 1; id <= verify::criterion_count; ++id) {
    const verify::CriterionResult r = verify::run_criterion(id, opt);
    const bool ok = r.passed();
    failed += !ok;
    std::cout << "[AC" << id << "] " << (ok ? "PASS" : "FAIL") << "  " << r.title << " (" << r.cases()
              << " cases)\n";
    for (const auto& c : r.checks) {
      if (c.passed) continue;
      std::cout << "       failed: " << c.name << "\n";
      for (const auto& f : c.failures) std::cout << "         " << f << "\n";
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.2fs\n", verify::criterion_count - failed, verify::criterion_count, secs);
  return failed == 0 ? 0 : 1;
}
