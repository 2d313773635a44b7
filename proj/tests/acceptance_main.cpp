// Verification sweep runner: one line per criterion, nonzero exit on any
// failure. The same sweep backs the CLI's `sweep` subcommand.
#include <iostream>

#include "pfh/sweep.hpp"

int main() {
  const pfh::SweepReport report = pfh::run_acceptance_sweep();
  std::cout << pfh::sweep_report_text(report);
  return report.all_pass ? 0 : 1;
}
