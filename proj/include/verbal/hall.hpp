#ifndef VERBAL_HALL_HPP
#define VERBAL_HALL_HPP

#include <memory>
#include <string>
#include <vector>

#include "verbal/ncpoly.hpp"
#include "verbal/word.hpp"

namespace verbal {

// One basic commutator: either a generator leaf or a bracket of two earlier
// basis elements.
struct BasicCommutator {
  int sym = -1;    // generator index for leaves
  int left = -1;   // basis indices for brackets
  int right = -1;
  int weight = 1;
  bool is_leaf() const { return sym >= 0; }
};

// The Hall basis of basic commutators of weight <= class_bound over symbols
// 0..num_symbols-1.  Ordered by weight, then lexicographically by the
// (left, right) construction pair; generators come first in symbol order.
// A bracket [u,v] is basic iff u > v and, when u = [u1,u2], u2 <= v.
class HallBasis {
 public:
  HallBasis(int num_symbols, int class_bound, std::size_t max_size = 200000);

  int num_symbols() const { return num_symbols_; }
  int class_bound() const { return class_bound_; }
  std::size_t size() const { return elems_.size(); }
  const BasicCommutator& operator[](std::size_t i) const { return elems_[i]; }

  // Basis indices of the given weight.
  std::vector<int> indices_of_weight(int w) const;

  // Expansion into a reduced free-group word via [a,b] = a^-1 b^-1 a b.
  FreeWord<int> expand(int idx) const;

  // The associated free-Lie-ring element (same bracketing, Lie brackets).
  LieElem lie(int idx) const;

  // Left-normed rewriting of the basis element in the free Lie ring:
  // an exact integer combination of left-normed brackets.
  std::map<std::vector<int>, long long> left_normed_form(int idx) const;

  std::string str(int idx, const std::vector<std::string>& names) const;

 private:
  int num_symbols_;
  int class_bound_;
  std::vector<BasicCommutator> elems_;
};

// Exponent vector over a Hall basis; the unique normal form of a word in the
// free nilpotent group of the basis' class.
struct HallNormalForm {
  std::shared_ptr<const HallBasis> basis;
  std::vector<long long> exponents;

  bool trivial() const;
  std::string str(const std::vector<std::string>& names) const;

  // Equal when taken over the same alphabet and class with equal exponents.
  friend bool operator==(const HallNormalForm& a, const HallNormalForm& b) {
    return a.basis->num_symbols() == b.basis->num_symbols() &&
           a.basis->class_bound() == b.basis->class_bound() &&
           a.exponents == b.exponents;
  }
};

// Collection: the normal form of w modulo gamma_{c+1} of the free group on
// 0..num_symbols-1.  Exponents are peeled weight by weight from the Magnus
// expansion; each stage certifies that the residual lies one step deeper in
// the lower central series, and the final residual is checked to vanish
// modulo gamma_{c+1}.
HallNormalForm collect(const FreeWord<int>& w, int num_symbols, int c);

// Named-alphabet convenience overloads.
HallBasis hall_basis(const std::vector<std::string>& alphabet, int c);
HallNormalForm collect(const Word& w, int c);

// Largest j in {1,...,cap} with w in gamma_j of the free group (so everything
// in gamma_cap is reported as cap).  Computed from the Magnus expansion.
int filtration_level(const FreeWord<int>& w, int cap);

// Solves sum_j x_j * columns[j] = target exactly over the integers.  Throws
// if the system is inconsistent or the solution is not integral.
std::vector<long long> solve_integer_combination(const std::vector<LieElem>& columns,
                                                 const LieElem& target);

// Swaps the first two entries of a left-normed commutator; the result is
// congruent to the inverse of the original modulo gamma_{weight+1}.
std::vector<int> inverse_commutator_swap(const std::vector<int>& entries);

// Verifies that congruence: expand([k1,k2,...]) * expand(swapped) lies in
// gamma_{weight+1}.
bool check_inverse_swap_congruence(const std::vector<int>& entries);

// Left-normed commutator word over int symbols.
FreeWord<int> left_normed_word(const std::vector<int>& entries);

}  // namespace verbal

#endif
