#ifndef VERBAL_NCPOLY_HPP
#define VERBAL_NCPOLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "verbal/error.hpp"
#include "verbal/free_word.hpp"

namespace verbal {

// Monomial in noncommuting symbols 0..m-1, as the sequence of factors.
using Mono = std::vector<int>;

// Truncated polynomial in noncommuting symbols over the integers: every
// monomial of degree > cap is dropped.  This realises arithmetic in
// Z<X_0,...,X_{m-1}> / (degree > cap), the target of the Magnus embedding.
class NcPoly {
 public:
  explicit NcPoly(int cap) : cap_(cap) {}

  static NcPoly one(int cap) {
    NcPoly p(cap);
    p.terms_[Mono{}] = 1;
    return p;
  }

  int cap() const { return cap_; }
  const std::map<Mono, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Mono& m, long long c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly operator*(const NcPoly& o) const;

  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  // Terms of the given total degree.
  std::map<Mono, long long> homogeneous(int degree) const;

  // Smallest degree >= 1 carrying a nonzero term, or cap+1 if none.
  int lowest_positive_degree() const;

  // Multiplies by (1 + X_s)^e on the right, truncating at cap; e may be
  // negative, using the geometric series for (1 + X)^-1.
  void mul_generator_power(int sym, long long e);

 private:
  int cap_;
  std::map<Mono, long long> terms_;
};

// Magnus expansion of a reduced word over symbols 0..m-1: each generator g
// maps to 1 + X_g.  A word lies in gamma_k of the free group iff all
// homogeneous parts of degrees 1..k-1 vanish (Magnus-Witt), which is how the
// collection engine certifies filtration membership.
NcPoly magnus_expansion(const FreeWord<int>& w, int cap);

// Free-Lie-ring elements of one homogeneous degree, as integer combinations
// of noncommutative monomials.
using LieElem = std::map<Mono, long long>;

// Lie bracket [a,b] = ab - ba on homogeneous components.
LieElem lie_bracket(const LieElem& a, const LieElem& b);

LieElem lie_generator(int sym);

// Left-normed bracket [s_0, s_1, ..., s_{k-1}] in the free Lie ring.
LieElem lie_left_normed(const std::vector<int>& seq);

// Rewrites the Lie element [left-normed p, left-normed q] as an integer
// combination of left-normed brackets (Jacobi recursion on |q|).
void accumulate_left_normed_product(const std::vector<int>& p,
                                    const std::vector<int>& q, long long coeff,
                                    std::map<std::vector<int>, long long>& out);

}  // namespace verbal

#endif
