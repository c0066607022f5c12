// Acceptance harness: runs every verification suite at its pinned scope and
// prints one pass/fail line per criterion.  Exit code 0 only if all pass.

#include <cstdio>
#include <string>
#include <vector>

#include "verbal/verify_suites.hpp"

int main() {
  using verbal::SuiteResult;
  struct Criterion {
    const char* title;
    SuiteResult (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"F2 identity over all parameter and argument tuples",
       [] { return verbal::suite_f2(); }},
      {"shift expansion emits 2^deg - 2 factors of smaller degree",
       [] { return verbal::suite_shift_counts(); }},
      {"collection agrees with evaluation on 200 random words",
       [] { return verbal::suite_collect(200, 12345); }},
      {"length value (3,4) at class 8 and the degree-5 example",
       [] { return verbal::suite_length_example(); }},
      {"substitution checkers conclude on all small catalog groups",
       [] { return verbal::suite_cor3(16); }},
      {"semidirect computation matches the closed-form polynomial",
       [] { return verbal::suite_laurent(3, {2, 3, 5}); }},
      {"[x,y]^q is weakly rational on catalog groups of order <= 24",
       [] { return verbal::suite_weak_rationality(24); }},
      {"exponent-2, exponent-3 and 2-Engel class bounds",
       [] { return verbal::suite_class_bounds(81); }},
      {"value sets factor through the Sylow decomposition",
       [] { return verbal::suite_sylow(64); }},
      {"power words on abelian groups hit the power-map image",
       [] { return verbal::suite_power_contract(64); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    SuiteResult r = criteria[i].run();
    std::printf("[%s] %2zu. %s -- %s (%.1fs)\n", r.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].title, r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.passed) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
