#include "verbal/laurent.hpp"

#include <sstream>

#include "verbal/group.hpp"

namespace verbal {

LaurentPoly LaurentPoly::monomial(long long p, int exp, long long coeff) {
  LaurentPoly out(p);
  out.add(exp, coeff);
  return out;
}

void LaurentPoly::add(int exp, long long coeff) {
  coeff = ((coeff % p_) + p_) % p_;
  if (coeff == 0) return;
  auto it = coeffs_.find(exp);
  if (it == coeffs_.end()) {
    coeffs_.emplace(exp, coeff);
  } else {
    it->second = (it->second + coeff) % p_;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (auto [e, c] : o.coeffs_) out.add(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(p_);
  for (auto [e, c] : coeffs_) out.add(e, p_ - c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out(p_);
  for (auto [e1, c1] : coeffs_)
    for (auto [e2, c2] : o.coeffs_) out.add(e1 + e2, c1 * c2);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out(p_);
  for (auto [e, c] : coeffs_) out.add(e + k, c);
  return out;
}

namespace {

long long inverse_mod(long long a, long long p) {
  long long r = 1, b = a % p, e = p - 2;  // p prime
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::canonical() const {
  if (coeffs_.empty()) return *this;
  int lo = coeffs_.begin()->first;
  long long top = coeffs_.rbegin()->second;
  long long scale = inverse_mod(top, p_);
  LaurentPoly out(p_);
  for (auto [e, c] : coeffs_) out.add(e - lo, c * scale);
  return out;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    auto [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || e == 0) os << c;
    if (e != 0) {
      if (c != 1) os << '*';
      os << 'T';
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

LaurentSemidirectElement LaurentSemidirectElement::operator*(
    const LaurentSemidirectElement& o) const {
  return {base + o.base.shifted(shift), shift + o.shift};
}

LaurentSemidirectElement LaurentSemidirectElement::inverse() const {
  return {(-base).shifted(-shift), -shift};
}

LaurentSemidirectElement LaurentSemidirectElement::pow(long long e) const {
  LaurentSemidirectElement acc{LaurentPoly(base.modulus()), 0};
  LaurentSemidirectElement b = e >= 0 ? *this : inverse();
  long long k = e >= 0 ? e : -e;
  for (long long i = 0; i < k; ++i) acc = acc * b;
  return acc;
}

LaurentSemidirectElement wreath_a(long long p) {
  return {LaurentPoly::monomial(p, 0, 1), 0};
}

LaurentSemidirectElement wreath_t(long long p) { return {LaurentPoly(p), 1}; }

namespace {

LaurentSemidirectElement commutator(const LaurentSemidirectElement& a,
                                    const LaurentSemidirectElement& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace

LaurentPoly laurent_closed_form(const GeneralizedEngelShape& shape, long long p) {
  if (shape.arity() < 2) fail(ErrorKind::domain, "closed form needs arity >= 2");
  long long e1 = shape.exponents[0];
  if (e1 <= 0) fail(ErrorKind::domain, "closed form needs e_1 > 0");
  LaurentPoly acc(p);
  for (long long j = 0; j < e1; ++j) acc.add(static_cast<int>(j), 1);
  for (int i = 1; i < shape.arity(); ++i) {
    LaurentPoly f(p);
    f.add(static_cast<int>(shape.exponents[i]), 1);
    f.add(0, -1);
    acc = acc * f;
  }
  return acc.canonical();
}

LaurentPoly laurent_image(const GeneralizedEngelShape& shape, long long p) {
  if (shape.arity() < 2) fail(ErrorKind::domain, "laurent_image needs arity >= 2");
  if (!is_prime(p)) fail(ErrorKind::domain, "laurent_image needs a prime modulus");
  for (long long e : shape.exponents)
    if (e == 0) fail(ErrorKind::domain, "laurent_image: exponents must be nonzero");

  GeneralizedEngelShape norm = shape;
  if (norm.exponents[0] < 0) norm.exponents[0] = -norm.exponents[0];

  LaurentSemidirectElement x = wreath_t(p) * wreath_a(p);
  LaurentSemidirectElement y = wreath_t(p);
  LaurentSemidirectElement acc = x.pow(norm.exponents[0]);
  for (int i = 1; i < norm.arity(); ++i)
    acc = commutator(acc, y.pow(norm.exponents[i]));

  check(acc.shift == 0, "laurent_image: commutator left the base group");
  LaurentPoly computed = acc.base.canonical();
  check(computed == laurent_closed_form(norm, p),
        "laurent_image: computed value disagrees with the closed form");
  return computed;
}

bool implies_virtual_nilpotency(const GeneralizedEngelShape& shape,
                                const std::vector<long long>& primes) {
  if (shape.arity() == 0) fail(ErrorKind::domain, "empty shape");
  for (long long e : shape.exponents)
    if (e == 0) fail(ErrorKind::domain, "shape exponents must be nonzero");
  if (shape.arity() == 1) return true;  // x^m with m != 0
  for (long long p : primes)
    if (laurent_image(shape, p).is_zero()) return false;
  return true;
}

}  // namespace verbal
