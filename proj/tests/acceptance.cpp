// Acceptance suite: one PASS/FAIL line per reproduction criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cospec/acceptance.hpp"

int main(int argc, char** argv) {
  cospec::acceptance::Options options;
  if (argc > 1) options.workers = static_cast<unsigned>(std::stoul(argv[1]));
  bool all = true;
  for (const auto& [id, check] : cospec::acceptance::criteria()) {
    const auto r = cospec::acceptance::run_criterion(check, id, options);
    all = all && r.passed;
    std::printf("[%s] criterion %2d: %s (%.2fs) -- %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASSED" : "ACCEPTANCE FAILURES PRESENT");
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
