#ifndef VERBAL_VERIFY_SUITES_HPP
#define VERBAL_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace verbal {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // counters on success, witness on failure
  double seconds = 0.0;
};

// The F2 identity for the three reference parametrised words over the
// class-consistent (class, group) pairs, all b- and g-tuples.
SuiteResult suite_f2();

// Same sweep for a single (class, group) configuration.
SuiteResult suite_f2_single(int class_bound, const std::string& group_spec);

// Shifted-factor counts 2^deg - 2 with strict degree drop, all elementary
// commutators over a small symbol pool.
SuiteResult suite_shift_counts();

// Collection vs. exhaustive evaluation in UT(c+1, p) on random words
// (sampled assignments where the full sweep is beyond desk scale).
SuiteResult suite_collect(int word_count = 200, std::uint64_t seed = 12345);

// The worked length-function value (3,4) at class 8 and the degree-5 example.
SuiteResult suite_length_example();

// Coset-constancy and translation-invariance checkers over the catalog:
// conclusion must hold whenever the hypothesis does.
SuiteResult suite_cor3(int max_order = 16);

// Semidirect-product computation against the closed-form polynomial over the
// exponent grid, plus the finite-wreath non-law cross-check.
SuiteResult suite_laurent(int max_e = 3, std::vector<long long> primes = {2, 3, 5});

// Weak rationality of [x,y]^q on small catalog groups.
SuiteResult suite_weak_rationality(int max_order = 24);

// Nilpotency-class bounds for the word families on catalog groups.
SuiteResult suite_class_bounds(int max_order = 81);

// Value sets of nilpotent groups factor through their Sylow decomposition.
SuiteResult suite_sylow(int max_order = 64);

// Power words on abelian groups: value set = image of the power map.
SuiteResult suite_power_contract(int max_order = 24);

std::vector<SuiteResult> run_all_acceptance();

}  // namespace verbal

#endif
