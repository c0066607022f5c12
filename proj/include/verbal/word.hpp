#ifndef VERBAL_WORD_HPP
#define VERBAL_WORD_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "verbal/free_word.hpp"

namespace verbal {

// A group word: a freely reduced word over a declared, per-word alphabet of
// variable names.  Convention used throughout: [a,b] = a^-1 b^-1 a b and
// a^b = b^-1 a b; repeated brackets [a,b,c,...] are left-normed.
class Word {
 public:
  Word() = default;
  Word(FreeWord<std::string> body, std::vector<std::string> alphabet);

  const FreeWord<std::string>& body() const { return body_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  bool empty() const { return body_.empty(); }

  // Exponent sums per alphabet variable (zero entries included).
  std::vector<long long> exponent_vector() const;

  Word operator*(const Word& other) const;  // alphabets are merged
  Word inverse() const;
  Word pow(long long n) const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  FreeWord<std::string> body_;
  std::vector<std::string> alphabet_;
};

Word commutator(const Word& a, const Word& b);

// Grammar: variables from the alphabet, juxtaposition or '*' for products,
// '^' integer exponents, '(...)' grouping, '[u,v,w,...]' left-normed
// commutators, '1' for the empty word.  Longest-match lexing against the
// alphabet, so "x1x2" splits correctly when both names are declared.
Word parse_word(const std::string& text, const std::vector<std::string>& alphabet);

// Nested commutator structure; leaves are variable names.  A tree may repeat
// variables (e.g. Engel words); the multilinear predicate detects that.
class CommutatorTree {
 public:
  static CommutatorTree leaf(std::string var);
  static CommutatorTree bracket(CommutatorTree left, CommutatorTree right);

  bool is_leaf() const { return !left_; }
  const std::string& var() const { return var_; }
  const CommutatorTree& left() const { return *left_; }
  const CommutatorTree& right() const { return *right_; }

  // Leaf variables in left-to-right order, with repeats.
  std::vector<std::string> leaves() const;

  // Expansion into a Word via [a,b] = a^-1 b^-1 a b.
  Word expand() const;

  std::string str() const;
  std::string to_json() const;
  static CommutatorTree from_json(const std::string& text);

  bool operator==(const CommutatorTree& o) const;

 private:
  std::string var_;
  std::shared_ptr<const CommutatorTree> left_, right_;
};

// True iff every leaf variable occurs exactly once.
bool is_multilinear_commutator(const CommutatorTree& tree);

// gamma_1 = x_1, gamma_k = [gamma_{k-1}, x_k]; left-normed on x_1..x_k.
CommutatorTree gamma_word(int k);

// delta_0 = x_1, delta_k = [delta_{k-1}(first half), delta_{k-1}(second half)]
// on 2^k variables.
CommutatorTree delta_word(int k);

// [x, y, ..., y] with n >= 1 copies of y, expanded to a Word on {x, y}.
Word engel_word(int n);

// w = u v with u = x_1^{e_1} ... x_r^{e_r} (alphabet order) and v = u^-1 w a
// commutator word; gcd_m = gcd of the exponents, 0 if all vanish.
struct AbelianSplit {
  std::map<std::string, long long> exponents;
  long long gcd_m = 0;
  Word commutator_part;
};

AbelianSplit abelian_split(const Word& w);

// (x1 x2)^-m x1^m x2^m on the alphabet {x1, x2}; requires m >= 0.
Word tilde_v_word(long long m);

}  // namespace verbal

#endif
