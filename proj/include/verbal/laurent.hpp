#ifndef VERBAL_LAURENT_HPP
#define VERBAL_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "verbal/error.hpp"

namespace verbal {

// Sparse Laurent polynomial over F_p: exponent -> nonzero coefficient.
class LaurentPoly {
 public:
  explicit LaurentPoly(long long p) : p_(p) {}
  static LaurentPoly monomial(long long p, int exp, long long coeff);

  long long modulus() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, long long>& coeffs() const { return coeffs_; }

  void add(int exp, long long coeff);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(int k) const;  // multiply by T^k

  // Unit-normalised associate: lowest exponent moved to 0 and the top
  // coefficient scaled to 1.  Associates in F_p[T,T^-1] differ exactly by a
  // unit c*T^j, so canonical forms are equal iff the polynomials agree up to
  // the commutator-convention unit.
  LaurentPoly canonical() const;

  std::string str() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  long long p_;
  std::map<int, long long> coeffs_;
};

// Element of F_p[T,T^-1] x| <T>: base polynomial plus a power of the acting
// unit T.  Multiplication: (f, T^k)(g, T^m) = (f + T^k g, T^{k+m}).
struct LaurentSemidirectElement {
  LaurentPoly base;
  int shift;

  LaurentSemidirectElement(LaurentPoly b, int s) : base(std::move(b)), shift(s) {}

  LaurentSemidirectElement operator*(const LaurentSemidirectElement& o) const;
  LaurentSemidirectElement inverse() const;
  LaurentSemidirectElement pow(long long e) const;
  bool is_identity() const { return shift == 0 && base.is_zero(); }
};

LaurentSemidirectElement wreath_a(long long p);  // (1, T^0)
LaurentSemidirectElement wreath_t(long long p);  // (0, T^1)

// [x^{e_1}, y^{e_2}, ..., y^{e_r}] with nonzero exponents.
struct GeneralizedEngelShape {
  std::vector<long long> exponents;
  int arity() const { return static_cast<int>(exponents.size()); }
};

// Base-group image of w(ta, t) computed by semidirect-product arithmetic and
// returned in canonical form.  A negative e_1 is first normalised to |e_1|
// (substituting x -> x^-1 is a bijection, so law questions are unaffected).
// The result is checked against the closed form before returning.
LaurentPoly laurent_image(const GeneralizedEngelShape& shape, long long p);

// (T^{e_1-1} + ... + T + 1)(T^{e_2} - 1) ... (T^{e_r} - 1), canonicalised;
// requires e_1 > 0.
LaurentPoly laurent_closed_form(const GeneralizedEngelShape& shape, long long p);

// True iff the image is nonzero for every supplied prime.  For this shape the
// all-primes claim holds structurally: each factor has at least two distinct
// monomials with unit coefficients, and F_p[T,T^-1] is a domain; the supplied
// primes serve as an arithmetic cross-check.  Arity 1 is a plain power word,
// which qualifies whenever its exponent is nonzero.
bool implies_virtual_nilpotency(const GeneralizedEngelShape& shape,
                                const std::vector<long long>& primes);

}  // namespace verbal

#endif
