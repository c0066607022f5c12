#ifndef VERBAL_WORD_VALUES_HPP
#define VERBAL_WORD_VALUES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "verbal/group.hpp"
#include "verbal/word.hpp"

namespace verbal {

struct EnumBudget {
  std::uint64_t max_tuples = 100000000;  // hard error beyond this, never truncation
};

// One group element per alphabet variable of a word, with optional
// per-variable domains (default: the whole group).
struct Assignment {
  std::vector<Elem> values;
  std::vector<std::optional<Subgroup>> domains;  // parallel to values if nonempty
};

Elem evaluate(const Word& w, const FiniteGroup& g, const Assignment& a);

// G_w: exact enumeration of word values.  Assignments run in row-major order
// over canonical element ids; when every domain is the whole group the scan
// restricts the first occurring variable to conjugacy-class representatives
// and closes the result under conjugation, which is sound because value sets
// are conjugation-closed.  The budget counts enumerated tuples.
std::vector<Elem> value_set(const Word& w, const FiniteGroup& g,
                            const std::vector<std::optional<Subgroup>>& domains = {},
                            const EnumBudget& budget = {});

// w(G) = <G_w>, verified normal.
Subgroup verbal_subgroup(const Word& w, const FiniteGroup& g,
                         const EnumBudget& budget = {});

// Evaluates a commutator tree at the given leaf values (leaf order).
Elem evaluate_tree(const CommutatorTree& tree, const FiniteGroup& g,
                   const std::vector<Elem>& leaf_values);

// Index selection for the substitution calculus: position s carries a y-family
// if selected, a z-family otherwise.  Families are nonempty element sets.
struct ISelection {
  std::vector<bool> in_I;                    // size r
  std::vector<std::vector<Elem>> families;   // size r, each nonempty

  int arity() const { return static_cast<int>(in_I.size()); }
};

// Subgroup generated by all tree values with the s-th entry ranging over
// families[s].  The tree must be multilinear.
Subgroup wI_subgroup(const CommutatorTree& tree, const ISelection& sel,
                     const FiniteGroup& g, const EnumBudget& budget = {});

enum class CheckStatus { hypothesis_failed, conclusion_true, conclusion_false };

struct CorCheckResult {
  CheckStatus status;
  std::string detail;
  explicit operator bool() const { return status == CheckStatus::conclusion_true; }
};

// Coset-constancy transfer: if w is constant on (g_1 H, ..., g_r H), then all
// substitutions picking a proper subset of positions from the cosets and the
// rest from H generate the trivial subgroup.  The hypothesis is tested first;
// a failed hypothesis is reported, never silently passed.
CorCheckResult check_cor_uno(const CommutatorTree& tree, const FiniteGroup& g,
                             const Subgroup& h, const std::vector<Elem>& g_tuple,
                             const EnumBudget& budget = {});

// Translation invariance: if w_J(G; H) = 1 for all J strictly inside I, then
// multiplying the I-positions by H-elements does not change any value.
// Checked pointwise for all h in H^r and (up to the coset reduction proved in
// the implementation) all g over the I-positions.
CorCheckResult check_cor_M(const CommutatorTree& tree, const FiniteGroup& g,
                           const Subgroup& h, const std::vector<bool>& in_I,
                           const EnumBudget& budget = {});

// True iff w_J(G; V) = 1 for every proper subset J of I.
bool vanishing_predicate(const CommutatorTree& tree, const FiniteGroup& g,
                         const std::vector<bool>& in_I, const Subgroup& v,
                         const EnumBudget& budget = {});

// Largest normal subgroup V (by order, ties broken by element list) with
// w_J(G; V) = 1 for all proper J inside I; nullopt when only the trivial
// subgroup qualifies.
std::optional<Subgroup> find_vanishing_subgroup(const CommutatorTree& tree,
                                                const FiniteGroup& g,
                                                const std::vector<bool>& in_I,
                                                const EnumBudget& budget = {});

// Minimal m such that products of m values-or-inverses cover w(G); 0 when
// w(G) is trivial.
int word_width(const Word& w, const FiniteGroup& g, const EnumBudget& budget = {});

// Checks closure of G_w under e-th powers for every e coprime to |G| with
// 1 <= e <= exponent(G).
bool is_weakly_rational_on(const Word& w, const FiniteGroup& g,
                           const EnumBudget& budget = {});

// (ab)^m = a^m b^m for all pairs.
bool power_map_is_endomorphism(const FiniteGroup& g, long long m);

struct ConcisenessReport {
  int value_count = 0;
  int verbal_order = 0;
  int width = 0;
  bool weakly_rational_on_G = false;
};

ConcisenessReport conciseness_report(const Word& w, const FiniteGroup& g,
                                     const EnumBudget& budget = {});

}  // namespace verbal

#endif
