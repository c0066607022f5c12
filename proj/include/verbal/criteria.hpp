#ifndef VERBAL_CRITERIA_HPP
#define VERBAL_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "verbal/laurent.hpp"
#include "verbal/word.hpp"
#include "verbal/word_values.hpp"

namespace verbal {

// Exhaustive law check: w(G) sweeps the identity only.
bool is_law_in(const Word& w, const FiniteGroup& g, const EnumBudget& budget = {});

// w = u v with u the power part; in any group where v and tilde_v are laws,
// the w-values are exactly the image of the m-th power map.
struct CommutatorReduction {
  long long m = 0;
  Word v;        // commutator part, in the derived subgroup
  Word tilde_v;  // (x1 x2)^-m x1^m x2^m
};

CommutatorReduction reduce_to_commutator(const Word& w);

// Full prime factorisation m = p_1^{e_1} ... p_k^{e_k}, ascending primes.
std::vector<std::pair<long long, int>> prime_power_split(long long m);

// Word families with known nilpotency-class bounds for groups satisfying the
// law: x^2 -> 1, [x^2,z_1..z_r] -> 1+r, x^3 -> 3, [x^3,z_1..z_r] -> 3+r,
// [x,y,y] -> 3, [x,y,y,z_1..z_r] -> 3+r.
struct WordFamily {
  enum class Base { square, cube, engel2 };
  Base base;
  int extra_z = 0;  // number of appended z variables
};

Word family_word(const WordFamily& f);
int family_class_bound(const WordFamily& f);

// Verifies the law first (hypothesis); on success checks that the nilpotency
// class stays within the family bound.
CorCheckResult class_bound_check(const WordFamily& f, const FiniteGroup& g,
                                 const EnumBudget& budget = {});

// Words whose laws force a bounded nilpotency class, with r = 1 instances
// of the bracketed families: x^2, x^3, x^6, [x,y,y], [x^2,z], [x^3,z], [x,y,y,z].
std::vector<std::pair<std::string, Word>> bounded_class_words();

// Searches for an assignment with a nontrivial value of the shape word in
// C_p wr C_n: structured candidates first (monomial and two-monomial base
// parts), then, within budget, the full square sweep.  Returns a witness
// description or nullopt when the word is a law.
std::optional<std::string> wreath_nonlaw_witness(const GeneralizedEngelShape& shape,
                                                 long long p, int n,
                                                 const EnumBudget& budget = {});

// The shape as a word on {x, y}: [x^{e_1}, y^{e_2}, ..., y^{e_r}].
Word shape_word(const GeneralizedEngelShape& shape);

// Parses "[x^2,y]" / "[x^3,y,y]"-style text into a shape; rejects anything
// outside the supported pattern.
GeneralizedEngelShape parse_shape(const std::string& text);

}  // namespace verbal

#endif
