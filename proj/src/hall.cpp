#include "verbal/hall.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace verbal {

HallBasis::HallBasis(int num_symbols, int class_bound, std::size_t max_size)
    : num_symbols_(num_symbols), class_bound_(class_bound) {
  if (num_symbols < 1) fail(ErrorKind::domain, "hall basis needs a nonempty alphabet");
  if (class_bound < 1) fail(ErrorKind::domain, "hall basis needs class >= 1");
  for (int s = 0; s < num_symbols; ++s)
    elems_.push_back(BasicCommutator{s, -1, -1, 1});
  for (int w = 2; w <= class_bound; ++w) {
    std::size_t n = elems_.size();
    for (std::size_t u = 0; u < n; ++u) {
      if (elems_[u].weight >= w) continue;
      int vw = w - elems_[u].weight;
      for (std::size_t v = 0; v < u; ++v) {
        if (elems_[v].weight != vw) continue;
        if (!elems_[u].is_leaf() && elems_[u].right > static_cast<int>(v)) continue;
        elems_.push_back(BasicCommutator{-1, static_cast<int>(u), static_cast<int>(v), w});
        if (elems_.size() > max_size)
          fail(ErrorKind::budget, "hall basis exceeds size budget");
      }
    }
    // within one weight, order candidates by (left, right)
    auto begin = elems_.begin();
    std::advance(begin, n);
    std::sort(begin, elems_.end(), [](const BasicCommutator& a, const BasicCommutator& b) {
      return std::pair(a.left, a.right) < std::pair(b.left, b.right);
    });
  }
}

std::vector<int> HallBasis::indices_of_weight(int w) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].weight == w) out.push_back(static_cast<int>(i));
  return out;
}

FreeWord<int> HallBasis::expand(int idx) const {
  const auto& e = elems_[idx];
  if (e.is_leaf()) return FreeWord<int>::generator(e.sym);
  return FreeWord<int>::commutator(expand(e.left), expand(e.right));
}

LieElem HallBasis::lie(int idx) const {
  const auto& e = elems_[idx];
  if (e.is_leaf()) return lie_generator(e.sym);
  return lie_bracket(lie(e.left), lie(e.right));
}

std::map<std::vector<int>, long long> HallBasis::left_normed_form(int idx) const {
  const auto& e = elems_[idx];
  std::map<std::vector<int>, long long> out;
  if (e.is_leaf()) {
    out[{e.sym}] = 1;
    return out;
  }
  auto lhs = left_normed_form(e.left);
  auto rhs = left_normed_form(e.right);
  for (const auto& [p, cp] : lhs)
    for (const auto& [q, cq] : rhs)
      accumulate_left_normed_product(p, q, cp * cq, out);
  // exactness check against the direct Lie expansion
  LieElem direct = lie(idx);
  LieElem rebuilt;
  for (const auto& [seq, c] : out) {
    LieElem ln = lie_left_normed(seq);
    for (const auto& [m, cm] : ln) {
      rebuilt[m] += c * cm;
      if (rebuilt[m] == 0) rebuilt.erase(m);
    }
  }
  check(rebuilt == direct, "left_normed_form: rewriting mismatch");
  return out;
}

std::string HallBasis::str(int idx, const std::vector<std::string>& names) const {
  const auto& e = elems_[idx];
  if (e.is_leaf()) return names[e.sym];
  std::vector<int> chain;
  int cur = idx;
  while (!elems_[cur].is_leaf()) {
    chain.push_back(elems_[cur].right);
    cur = elems_[cur].left;
  }
  std::ostringstream os;
  os << '[' << str(cur, names);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) os << ',' << str(*it, names);
  os << ']';
  return os.str();
}

bool HallNormalForm::trivial() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](long long e) { return e == 0; });
}

std::string HallNormalForm::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << basis->str(static_cast<int>(i), names);
    if (exponents[i] != 1) os << '^' << exponents[i];
  }
  if (first) os << '1';
  return os.str();
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Q with long long fractions.

namespace {

struct Rat {
  long long n = 0, d = 1;

  void normalize() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }
};

Rat make_rat(long long n, long long d = 1) {
  Rat r{n, d};
  r.normalize();
  return r;
}

long long mul_checked(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  check(p <= INT64_MAX && p >= INT64_MIN, "rational overflow");
  return static_cast<long long>(p);
}

Rat operator*(const Rat& a, const Rat& b) {
  Rat r{mul_checked(a.n, b.n), mul_checked(a.d, b.d)};
  r.normalize();
  return r;
}

Rat operator-(const Rat& a, const Rat& b) {
  Rat r{mul_checked(a.n, b.d) - mul_checked(b.n, a.d), mul_checked(a.d, b.d)};
  r.normalize();
  return r;
}

Rat operator/(const Rat& a, const Rat& b) {
  check(b.n != 0, "rational division by zero");
  Rat r{mul_checked(a.n, b.d), mul_checked(a.d, b.n)};
  r.normalize();
  return r;
}

bool is_zero(const Rat& a) { return a.n == 0; }

}  // namespace

std::vector<long long> solve_integer_combination(const std::vector<LieElem>& columns,
                                                 const LieElem& target) {
  // Row space: every monomial appearing anywhere.
  std::map<Mono, int> row_of;
  auto note = [&row_of](const LieElem& e) {
    for (const auto& [m, c] : e) {
      (void)c;
      row_of.emplace(m, 0);
    }
  };
  for (const auto& col : columns) note(col);
  note(target);
  int rows = 0;
  for (auto& [m, idx] : row_of) {
    (void)m;
    idx = rows++;
  }

  int cols = static_cast<int>(columns.size());
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
  for (int j = 0; j < cols; ++j)
    for (const auto& [m, c] : columns[j]) a[row_of[m]][j] = make_rat(c);
  for (const auto& [m, c] : target) a[row_of[m]][cols] = make_rat(c);

  std::vector<int> pivot_col_of_row;
  int rank = 0;
  for (int j = 0; j < cols && rank < rows; ++j) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (!is_zero(a[i][j])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || is_zero(a[i][j])) continue;
      Rat f = a[i][j] / a[rank][j];
      for (int k = j; k <= cols; ++k) a[i][k] = a[i][k] - f * a[rank][k];
    }
    pivot_col_of_row.push_back(j);
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    check(is_zero(a[i][cols]), "solve_integer_combination: inconsistent system");

  std::vector<long long> x(cols, 0);
  for (int i = 0; i < rank; ++i) {
    int j = pivot_col_of_row[i];
    Rat v = a[i][cols] / a[i][j];
    check(v.d == 1, "solve_integer_combination: non-integral solution");
    x[j] = v.n;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Collection

int filtration_level(const FreeWord<int>& w, int cap) {
  if (w.empty()) return cap;
  NcPoly m = magnus_expansion(w, cap);
  int d = m.lowest_positive_degree();
  return d > cap ? cap : d;
}

HallNormalForm collect(const FreeWord<int>& w, int num_symbols, int c) {
  auto basis = std::make_shared<HallBasis>(num_symbols, c);
  HallNormalForm nf{basis, std::vector<long long>(basis->size(), 0)};

  FreeWord<int> residual = w;
  for (int k = 1; k <= c; ++k) {
    NcPoly m = magnus_expansion(residual, k);
    for (int d = 1; d < k; ++d)
      check(m.homogeneous(d).empty(), "collect: residual escaped the filtration");
    LieElem component = m.homogeneous(k);
    if (component.empty()) continue;

    auto idxs = basis->indices_of_weight(k);
    std::vector<LieElem> cols;
    cols.reserve(idxs.size());
    for (int idx : idxs) cols.push_back(basis->lie(idx));
    std::vector<long long> e = solve_integer_combination(cols, component);

    FreeWord<int> peel;
    for (std::size_t j = 0; j < idxs.size(); ++j) {
      nf.exponents[idxs[j]] = e[j];
      if (e[j] != 0) peel.append(basis->expand(idxs[j]).pow(e[j]));
    }
    residual = peel.inverse() * residual;
  }
  NcPoly fin = magnus_expansion(residual, c);
  for (int d = 1; d <= c; ++d)
    check(fin.homogeneous(d).empty(), "collect: residual not in gamma_{c+1}");
  return nf;
}

HallBasis hall_basis(const std::vector<std::string>& alphabet, int c) {
  return HallBasis(static_cast<int>(alphabet.size()), c);
}

HallNormalForm collect(const Word& w, int c) {
  FreeWord<int> coded;
  const auto& names = w.alphabet();
  for (const auto& l : w.body().letters()) {
    auto it = std::find(names.begin(), names.end(), l.sym);
    coded.push(static_cast<int>(it - names.begin()), l.exp);
  }
  return collect(coded, static_cast<int>(names.size()), c);
}

FreeWord<int> left_normed_word(const std::vector<int>& entries) {
  check(!entries.empty(), "left_normed_word: empty entry list");
  FreeWord<int> acc = FreeWord<int>::generator(entries[0]);
  for (std::size_t i = 1; i < entries.size(); ++i)
    acc = FreeWord<int>::commutator(acc, FreeWord<int>::generator(entries[i]));
  return acc;
}

std::vector<int> inverse_commutator_swap(const std::vector<int>& entries) {
  if (entries.size() < 2)
    fail(ErrorKind::domain, "inverse_commutator_swap needs length >= 2");
  std::vector<int> out = entries;
  std::swap(out[0], out[1]);
  return out;
}

bool check_inverse_swap_congruence(const std::vector<int>& entries) {
  auto swapped = inverse_commutator_swap(entries);
  FreeWord<int> prod = left_normed_word(entries) * left_normed_word(swapped);
  int k = static_cast<int>(entries.size());
  NcPoly m = magnus_expansion(prod, k);
  for (int d = 1; d <= k; ++d)
    if (!m.homogeneous(d).empty()) return false;
  return true;
}

}  // namespace verbal
