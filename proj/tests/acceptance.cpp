// One line per acceptance criterion; exit status 0 iff all pass.

#include "verify.hpp"

#include <cstdio>

int main() {
  using namespace smtkit;
  verify::Options opts;
  int failed = 0;
  for (const auto& c : verify::criteria()) {
    const verify::CriterionResult r = verify::run(c.id, opts);
    std::size_t passed = 0;
    for (const auto& ch : r.checks) passed += ch.pass;
    std::printf("criterion %2d %-20s %s  (%zu/%zu checks, %.2f s of %.0f s)  %s\n", r.id, r.key.c_str(),
                r.pass() ? "PASS" : "FAIL", passed, r.checks.size(), r.seconds, r.budget_seconds, r.title.c_str());
    for (const auto& ch : r.checks)
      if (!ch.pass) std::printf("    failed: %s: expected %s, got %s\n", ch.name.c_str(), ch.expected.c_str(), ch.actual.c_str());
    failed += !r.pass();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(verify::criteria().size()) - failed,
              verify::criteria().size());
  return failed == 0 ? 0 : 1;
}
