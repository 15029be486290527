// Runs every acceptance criterion and prints one line per criterion.

#include <iomanip>
#include <iostream>

#include "toricvb/validation.hpp"

int main() {
  bool all = true;
  toricvb::run_acceptance({}, [&](const toricvb::CriterionResult& r) {
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " [" << std::fixed
              << std::setprecision(2) << r.seconds << "s] " << r.detail << std::endl;
  });
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
  return all ? 0 : 1;
}
