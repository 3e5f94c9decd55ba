// Acceptance suite: one PASS/FAIL line per criterion on the default grid.

#include <iostream>

#include "wallspan/acceptance.hpp"

int main() {
  const wallspan::CampaignConfig cfg;  // m = 1..4, n = 0..8, 100 samples per case
  const auto results = wallspan::run_acceptance(cfg);
  wallspan::print_results(std::cout, results);
  return wallspan::all_passed(results) ? 0 : 1;
}
