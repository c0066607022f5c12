#include "verbal/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace verbal {

bool is_law_in(const Word& w, const FiniteGroup& g, const EnumBudget& budget) {
  auto values = value_set(w, g, {}, budget);
  return values.size() == 1 && values[0] == FiniteGroup::identity;
}

CommutatorReduction reduce_to_commutator(const Word& w) {
  AbelianSplit split = abelian_split(w);
  return CommutatorReduction{split.gcd_m, split.commutator_part,
                             tilde_v_word(split.gcd_m)};
}

std::vector<std::pair<long long, int>> prime_power_split(long long m) {
  if (m < 1) fail(ErrorKind::domain, "prime_power_split requires m >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

namespace {

Word with_z_tail(Word base, int r) {
  for (int i = 1; i <= r; ++i) {
    std::string z = "z" + std::to_string(i);
    Word zi(FreeWord<std::string>::generator(z), {z});
    base = commutator(base, zi);
  }
  return base;
}

}  // namespace

Word family_word(const WordFamily& f) {
  switch (f.base) {
    case WordFamily::Base::square:
      return with_z_tail(parse_word("x^2", {"x"}), f.extra_z);
    case WordFamily::Base::cube:
      return with_z_tail(parse_word("x^3", {"x"}), f.extra_z);
    case WordFamily::Base::engel2:
      return with_z_tail(parse_word("[x,y,y]", {"x", "y"}), f.extra_z);
  }
  fail(ErrorKind::internal, "family_word: bad family");
}

int family_class_bound(const WordFamily& f) {
  switch (f.base) {
    case WordFamily::Base::square:
      return 1 + f.extra_z;
    case WordFamily::Base::cube:
    case WordFamily::Base::engel2:
      return 3 + f.extra_z;
  }
  fail(ErrorKind::internal, "family_class_bound: bad family");
}

CorCheckResult class_bound_check(const WordFamily& f, const FiniteGroup& g,
                                 const EnumBudget& budget) {
  Word w = family_word(f);
  if (!is_law_in(w, g, budget))
    return {CheckStatus::hypothesis_failed, w.str() + " is not a law in " + g.name()};
  auto cls = nilpotency_class(g);
  if (!cls)
    return {CheckStatus::conclusion_false, g.name() + " is not nilpotent"};
  int bound = family_class_bound(f);
  if (*cls > bound)
    return {CheckStatus::conclusion_false,
            g.name() + " has class " + std::to_string(*cls) + " > " +
                std::to_string(bound)};
  return {CheckStatus::conclusion_true, ""};
}

std::vector<std::pair<std::string, Word>> bounded_class_words() {
  std::vector<std::pair<std::string, Word>> out;
  out.emplace_back("x^2", parse_word("x^2", {"x"}));
  out.emplace_back("x^3", parse_word("x^3", {"x"}));
  out.emplace_back("x^6", parse_word("x^6", {"x"}));
  out.emplace_back("[x,y,y]", parse_word("[x,y,y]", {"x", "y"}));
  out.emplace_back("[x^2,z1]", family_word({WordFamily::Base::square, 1}));
  out.emplace_back("[x^3,z1]", family_word({WordFamily::Base::cube, 1}));
  out.emplace_back("[x,y,y,z1]", family_word({WordFamily::Base::engel2, 1}));
  return out;
}

Word shape_word(const GeneralizedEngelShape& shape) {
  if (shape.arity() < 1) fail(ErrorKind::domain, "shape_word: empty shape");
  std::vector<std::string> ab{"x", "y"};
  Word acc(FreeWord<std::string>::generator("x").pow(shape.exponents[0]), ab);
  for (int i = 1; i < shape.arity(); ++i) {
    Word yi(FreeWord<std::string>::generator("y").pow(shape.exponents[i]), ab);
    acc = commutator(acc, yi);
  }
  return acc;
}

GeneralizedEngelShape parse_shape(const std::string& text) {
  // accepted pattern: [x^e1,y^e2,...,y^er] or x^m (powers default to 1)
  auto bad = [&text]() {
    fail(ErrorKind::unsupported,
         "unsupported shape \"" + text + "\": expected [x^e1,y^e2,...,y^er]");
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto parse_piece = [&bad](const std::string& piece, char var) -> long long {
    if (piece.empty() || piece[0] != var) bad();
    if (piece.size() == 1) return 1;
    if (piece[1] != '^') bad();
    try {
      return std::stoll(piece.substr(2));
    } catch (...) {
      bad();
    }
    return 0;
  };
  GeneralizedEngelShape shape;
  if (!s.empty() && s[0] != '[') {
    shape.exponents.push_back(parse_piece(s, 'x'));
    if (shape.exponents[0] == 0) bad();
    return shape;
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') bad();
  std::string inner = s.substr(1, s.size() - 2);
  std::vector<std::string> pieces;
  std::size_t start = 0;
  while (start <= inner.size()) {
    std::size_t comma = inner.find(',', start);
    if (comma == std::string::npos) {
      pieces.push_back(inner.substr(start));
      break;
    }
    pieces.push_back(inner.substr(start, comma - start));
    start = comma + 1;
  }
  if (pieces.size() < 2) bad();
  shape.exponents.push_back(parse_piece(pieces[0], 'x'));
  for (std::size_t i = 1; i < pieces.size(); ++i)
    shape.exponents.push_back(parse_piece(pieces[i], 'y'));
  for (long long e : shape.exponents)
    if (e == 0) bad();
  return shape;
}

namespace {

struct WreathElem {
  std::vector<int> f;  // base vector, length n, entries mod p
  int s;               // shift mod n
};

struct WreathOps {
  long long p;
  int n;

  WreathElem id() const { return {std::vector<int>(n, 0), 0}; }
  WreathElem mul(const WreathElem& a, const WreathElem& b) const {
    WreathElem out{std::vector<int>(n), (a.s + b.s) % n};
    for (int i = 0; i < n; ++i)
      out.f[i] = static_cast<int>((a.f[i] + b.f[((i - a.s) % n + n) % n]) % p);
    return out;
  }
  WreathElem inv(const WreathElem& a) const {
    WreathElem out{std::vector<int>(n), (n - a.s) % n};
    for (int i = 0; i < n; ++i)
      out.f[i] = static_cast<int>((p - a.f[((i + a.s) % n + n) % n]) % p);
    return out;
  }
  WreathElem pow(const WreathElem& a, long long e) const {
    WreathElem acc = id();
    WreathElem b = e >= 0 ? a : inv(a);
    long long k = e >= 0 ? e : -e;
    for (long long i = 0; i < k; ++i) acc = mul(acc, b);
    return acc;
  }
  WreathElem comm(const WreathElem& a, const WreathElem& b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  bool is_id(const WreathElem& a) const {
    if (a.s != 0) return false;
    return std::all_of(a.f.begin(), a.f.end(), [](int x) { return x == 0; });
  }

  WreathElem value(const GeneralizedEngelShape& shape, const WreathElem& x,
                   const WreathElem& y) const {
    WreathElem acc = pow(x, shape.exponents[0]);
    for (int i = 1; i < static_cast<int>(shape.exponents.size()); ++i)
      acc = comm(acc, pow(y, shape.exponents[i]));
    return acc;
  }

  std::string label(const WreathElem& a) const {
    std::ostringstream os;
    os << "w(";
    for (int i = 0; i < n; ++i) os << (i ? "," : "") << a.f[i];
    os << '|' << a.s << ')';
    return os.str();
  }
};

}  // namespace

std::optional<std::string> wreath_nonlaw_witness(const GeneralizedEngelShape& shape,
                                                 long long p, int n,
                                                 const EnumBudget& budget) {
  if (shape.arity() < 2)
    fail(ErrorKind::domain, "wreath_nonlaw_witness needs arity >= 2");
  WreathOps ops{p, n};

  auto witness = [&](const WreathElem& x, const WreathElem& y) {
    std::ostringstream os;
    os << "x = " << ops.label(x) << ", y = " << ops.label(y) << ", value "
       << ops.label(ops.value(shape, x, y));
    return os.str();
  };

  // tier 1: the Laurent-criterion assignment (ta, t)
  WreathElem t = ops.id();
  t.s = 1 % n;
  WreathElem a = ops.id();
  a.f[0] = 1;
  WreathElem ta = ops.mul(t, a);
  if (!ops.is_id(ops.value(shape, ta, t))) return witness(ta, t);

  // tier 2: monomial base parts against monomial base parts
  std::vector<WreathElem> monos;
  for (int s = 0; s < n; ++s)
    for (int pos = -1; pos < n; ++pos)
      for (long long c = 1; c < (pos < 0 ? 2 : p); ++c) {
        WreathElem e = ops.id();
        e.s = s;
        if (pos >= 0) e.f[pos] = static_cast<int>(c);
        monos.push_back(e);
        if (pos < 0) break;
      }
  for (const auto& x : monos)
    for (const auto& y : monos)
      if (!ops.is_id(ops.value(shape, x, y))) return witness(x, y);

  // tier 3: two-monomial base parts for x against monomials for y
  std::vector<WreathElem> pairs;
  for (int s = 0; s < n; ++s)
    for (int p1 = 0; p1 < n; ++p1)
      for (int p2 = p1 + 1; p2 < n; ++p2)
        for (long long c1 = 1; c1 < p; ++c1)
          for (long long c2 = 1; c2 < p; ++c2) {
            WreathElem e = ops.id();
            e.s = s;
            e.f[p1] = static_cast<int>(c1);
            e.f[p2] = static_cast<int>(c2);
            pairs.push_back(e);
          }
  for (const auto& x : pairs)
    for (const auto& y : monos) {
      if (!ops.is_id(ops.value(shape, x, y))) return witness(x, y);
      if (!ops.is_id(ops.value(shape, y, x))) return witness(y, x);
    }

  // full sweep within budget
  long long pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  long long order = pn * n;
  unsigned __int128 total = static_cast<unsigned __int128>(order) * order;
  if (total > budget.max_tuples)
    fail(ErrorKind::budget, "wreath_nonlaw_witness: full sweep exceeds the budget");

  auto decode = [&](long long id) {
    WreathElem e = ops.id();
    e.s = static_cast<int>(id % n);
    long long code = id / n;
    for (int i = 0; i < n; ++i) {
      e.f[i] = static_cast<int>(code % p);
      code /= p;
    }
    return e;
  };
  for (long long i = 0; i < order; ++i) {
    WreathElem x = decode(i);
    for (long long j = 0; j < order; ++j) {
      WreathElem y = decode(j);
      if (!ops.is_id(ops.value(shape, x, y))) return witness(x, y);
    }
  }
  return std::nullopt;  // the word is a law in C_p wr C_n
}

}  // namespace verbal
