#include "verbal/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace verbal {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using detail::GroupRep;

struct TableRep : GroupRep {
  std::vector<Elem> table;  // row-major, order x order
  std::vector<Elem> invs;
  std::vector<std::string> labels;

  Elem mul(Elem a, Elem b) const override { return table[a * order + b]; }
  Elem inv(Elem a) const override { return invs[a]; }
  std::string label(Elem a) const override { return labels[a]; }
};

std::shared_ptr<TableRep> tabulate(const GroupRep& src) {
  auto t = std::make_shared<TableRep>();
  t->order = src.order;
  t->name = src.name;
  int n = src.order;
  t->table.resize(static_cast<std::size_t>(n) * n);
  t->invs.resize(n);
  t->labels.resize(n);
  for (Elem a = 0; a < n; ++a) {
    t->labels[a] = src.label(a);
    t->invs[a] = src.inv(a);
    for (Elem b = 0; b < n; ++b) t->table[a * n + b] = src.mul(a, b);
  }
  return t;
}

void validate_axioms(const GroupRep& g) {
  int n = g.order;
  check(n >= 1, "group must be nonempty");
  for (Elem a = 0; a < n; ++a) {
    check(g.mul(0, a) == a && g.mul(a, 0) == a, g.name + ": identity axiom fails");
    Elem ia = g.inv(a);
    check(ia >= 0 && ia < n, g.name + ": inverse out of range");
    check(g.mul(a, ia) == 0 && g.mul(ia, a) == 0, g.name + ": inverse axiom fails");
  }
  auto assoc = [&g](Elem a, Elem b, Elem c) {
    check(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)),
          g.name + ": associativity fails");
  };
  if (n <= 256) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        check(g.mul(a, b) >= 0 && g.mul(a, b) < n, g.name + ": product out of range");
        for (Elem c = 0; c < n; ++c) assoc(a, b, c);
      }
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, n - 1);
    for (int i = 0; i < 20000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

FiniteGroup FiniteGroup::adopt(std::shared_ptr<detail::GroupRep> rep, bool validate) {
  if (rep->order > order_cap)
    fail(ErrorKind::budget, rep->name + ": order exceeds the catalog cap");
  if (validate) validate_axioms(*rep);
  FiniteGroup g;
  if (rep->order <= table_threshold)
    g.rep_ = tabulate(*rep);
  else
    g.rep_ = std::move(rep);
  return g;
}

Elem FiniteGroup::power(Elem a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  Elem acc = identity;
  while (n > 0) {
    if (n & 1) acc = mul(acc, a);
    a = mul(a, a);
    n >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  Elem x = a;
  while (x != identity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::optional<Elem> FiniteGroup::element_by_label(const std::string& label) const {
  for (Elem a = 0; a < order(); ++a)
    if (rep_->label(a) == label) return a;
  return std::nullopt;
}

std::map<int, int> FiniteGroup::order_profile() const {
  std::map<int, int> prof;
  for (Elem a = 0; a < order(); ++a) ++prof[element_order(a)];
  return prof;
}

// ---------------------------------------------------------------------------
// Catalog representations

namespace {

struct CyclicRep : detail::GroupRep {
  int n;
  explicit CyclicRep(int n_) : n(n_) {
    order = n;
    name = "C" + std::to_string(n);
  }
  Elem mul(Elem a, Elem b) const override { return (a + b) % n; }
  Elem inv(Elem a) const override { return (n - a) % n; }
  std::string label(Elem a) const override {
    if (a == 0) return "e";
    if (a == 1) return "g";
    return "g^" + std::to_string(a);
  }
};

struct DihedralRep : detail::GroupRep {
  int n;
  explicit DihedralRep(int n_) : n(n_) {
    order = 2 * n;
    name = "D" + std::to_string(n);
  }
  // id = rot + n * flip for r^rot s^flip
  Elem mul(Elem a, Elem b) const override {
    int i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
    int i = ((j1 ? i1 - i2 : i1 + i2) % n + n) % n;
    return i + n * (j1 ^ j2);
  }
  Elem inv(Elem a) const override {
    int i = a % n, j = a / n;
    return j ? a : (n - i) % n;
  }
  std::string label(Elem a) const override {
    int i = a % n, j = a / n;
    std::string s;
    if (i == 1)
      s = "r";
    else if (i > 1)
      s = "r^" + std::to_string(i);
    if (j) s += s.empty() ? "s" : "*s";
    return s.empty() ? "e" : s;
  }
};

std::string cycle_notation(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
      j = perm[j];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

struct MatrixCodec {
  int n;        // matrix size
  long long p;  // modulus
  int digits;   // n(n-1)/2 strictly-upper entries

  long long encode(const std::vector<int>& m) const {
    long long id = 0, base = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        id += m[i * n + j] * base;
        base *= p;
      }
    return id;
  }
  std::vector<int> decode(long long id) const {
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m[i * n + j] = static_cast<int>(id % p);
        id /= p;
      }
    return m;
  }
};

struct UnitriangularRep : detail::GroupRep {
  MatrixCodec codec;

  UnitriangularRep(int n_, long long p_) : codec{n_, p_, n_ * (n_ - 1) / 2} {
    long long ord = 1;
    for (int k = 0; k < codec.digits; ++k) ord *= p_;
    order = static_cast<int>(ord);
    name = "UT" + std::to_string(n_) + "_" + std::to_string(p_);
  }

  Elem mul(Elem a, Elem b) const override {
    auto ma = codec.decode(a), mb = codec.decode(b);
    int n = codec.n;
    std::vector<int> mc(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = i; k < n; ++k) {
        if (ma[i * n + k] == 0) continue;
        for (int j = k; j < n; ++j)
          mc[i * n + j] = static_cast<int>(
              (mc[i * n + j] + static_cast<long long>(ma[i * n + k]) * mb[k * n + j]) %
              codec.p);
      }
    return static_cast<Elem>(codec.encode(mc));
  }

  Elem inv(Elem a) const override {
    // (I + N)^-1 = I - N + N^2 - ... for nilpotent N
    auto m = codec.decode(a);
    int n = codec.n;
    std::vector<int> nil(n * n, 0), acc(n * n, 0), pw(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) nil[i * n + j] = m[i * n + j];
    for (int i = 0; i < n; ++i) {
      acc[i * n + i] = 1;
      pw[i * n + i] = 1;
    }
    long long sign = 1;
    for (int step = 1; step < n; ++step) {
      std::vector<int> next(n * n, 0);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          if (pw[i * n + k] == 0) continue;
          for (int j = 0; j < n; ++j)
            next[i * n + j] = static_cast<int>(
                (next[i * n + j] + static_cast<long long>(pw[i * n + k]) * nil[k * n + j]) %
                codec.p);
        }
      pw = next;
      sign = -sign;
      for (int i = 0; i < n * n; ++i)
        acc[i] = static_cast<int>(((acc[i] + sign * pw[i]) % codec.p + codec.p) % codec.p);
    }
    return static_cast<Elem>(codec.encode(acc));
  }

  std::string label(Elem a) const override {
    if (a == 0) return "e";
    std::ostringstream os;
    os << "u(";
    long long id = a;
    for (int k = 0; k < codec.digits; ++k) {
      if (k) os << ',';
      os << id % codec.p;
      id /= codec.p;
    }
    os << ')';
    return os.str();
  }
};

struct QuaternionRep : detail::GroupRep {
  // 0..7 = 1,-1,i,-i,j,-j,k,-k encoded as (unit in {1,i,j,k}, sign)
  QuaternionRep() {
    order = 8;
    name = "Q8";
  }
  static void split(Elem a, int& unit, int& sign) {
    unit = a / 2;
    sign = a % 2;  // 0 -> +, 1 -> -
  }
  Elem mul(Elem a, Elem b) const override {
    static constexpr int unit_mul[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // sign of unit product: i*j=k, j*i=-k etc.
    static constexpr int sign_mul[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int ua, sa, ub, sb;
    split(a, ua, sa);
    split(b, ub, sb);
    int u = unit_mul[ua][ub];
    int s = (sa + sb + sign_mul[ua][ub]) % 2;
    return u * 2 + s;
  }
  Elem inv(Elem a) const override {
    int u, s;
    split(a, u, s);
    if (u == 0) return a;       // +-1 self-inverse
    return u * 2 + (1 - s);     // i^-1 = -i
  }
  std::string label(Elem a) const override {
    static const char* names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return names[a];
  }
};

struct WreathRep : detail::GroupRep {
  long long p;
  int n;
  long long pn;  // p^n

  WreathRep(long long p_, int n_) : p(p_), n(n_) {
    pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    order = static_cast<int>(pn * n);
    name = "Wr" + std::to_string(p) + "_" + std::to_string(n);
  }

  // id = base_code * n + shift
  std::pair<std::vector<int>, int> decode(Elem a) const {
    int shift = a % n;
    long long code = a / n;
    std::vector<int> f(n);
    for (int i = 0; i < n; ++i) {
      f[i] = static_cast<int>(code % p);
      code /= p;
    }
    return {f, shift};
  }
  Elem encode(const std::vector<int>& f, int shift) const {
    long long code = 0, base = 1;
    for (int i = 0; i < n; ++i) {
      code += f[i] * base;
      base *= p;
    }
    return static_cast<Elem>(code * n + shift);
  }

  Elem mul(Elem a, Elem b) const override {
    auto [f, s] = decode(a);
    auto [g, t] = decode(b);
    std::vector<int> h(n);
    for (int i = 0; i < n; ++i)
      h[i] = static_cast<int>((f[i] + g[((i - s) % n + n) % n]) % p);
    return encode(h, (s + t) % n);
  }
  Elem inv(Elem a) const override {
    auto [f, s] = decode(a);
    std::vector<int> h(n);
    for (int i = 0; i < n; ++i)
      h[i] = static_cast<int>((p - f[((i + s) % n + n) % n]) % p);
    return encode(h, (n - s) % n);
  }
  std::string label(Elem a) const override {
    if (a == 0) return "e";
    auto [f, s] = decode(a);
    std::ostringstream os;
    os << "w(";
    for (int i = 0; i < n; ++i) {
      if (i) os << ',';
      os << f[i];
    }
    os << '|' << s << ')';
    return os.str();
  }
};

struct SemidirectPSquaredRep : detail::GroupRep {
  long long p, p2;
  std::vector<long long> act;  // (1+p)^y mod p^2

  explicit SemidirectPSquaredRep(long long p_) : p(p_), p2(p_ * p_) {
    order = static_cast<int>(p2 * p);
    name = "ES" + std::to_string(p) + "^3+";
    act.resize(p);
    act[0] = 1;
    for (long long y = 1; y < p; ++y) act[y] = act[y - 1] * (1 + p) % p2;
  }
  // id = x + p^2 * y for a^x b^y
  Elem mul(Elem a, Elem b) const override {
    long long x1 = a % p2, y1 = a / p2, x2 = b % p2, y2 = b / p2;
    return static_cast<Elem>((x1 + x2 * act[y1]) % p2 + p2 * ((y1 + y2) % p));
  }
  Elem inv(Elem a) const override {
    long long x = a % p2, y = a / p2;
    long long yi = (p - y) % p;
    long long xi = (p2 - x * act[yi] % p2) % p2;
    return static_cast<Elem>(xi + p2 * yi);
  }
  std::string label(Elem e) const override {
    if (e == 0) return "e";
    long long x = e % p2, y = e / p2;
    std::ostringstream os;
    if (x) {
      os << 'a';
      if (x > 1) os << '^' << x;
    }
    if (y) {
      if (x) os << '*';
      os << 'b';
      if (y > 1) os << '^' << y;
    }
    return os.str();
  }
};

struct DirectProductRep : detail::GroupRep {
  FiniteGroup a, b;
  DirectProductRep(FiniteGroup a_, FiniteGroup b_) : a(std::move(a_)), b(std::move(b_)) {
    order = a.order() * b.order();
    name = a.name() + "x" + b.name();
  }
  Elem mul(Elem x, Elem y) const override {
    int nb = b.order();
    return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  }
  Elem inv(Elem x) const override {
    int nb = b.order();
    return a.inv(x / nb) * nb + b.inv(x % nb);
  }
  std::string label(Elem x) const override {
    if (x == 0) return "e";
    int nb = b.order();
    return "(" + a.label(x / nb) + "," + b.label(x % nb) + ")";
  }
};

struct QuotientRep : detail::GroupRep {
  FiniteGroup parent;
  std::vector<Elem> coset_of;  // |G| -> quotient id
  std::vector<Elem> reps;      // quotient id -> representative

  Elem mul(Elem a, Elem b) const override {
    return coset_of[parent.mul(reps[a], reps[b])];
  }
  Elem inv(Elem a) const override { return coset_of[parent.inv(reps[a])]; }
  std::string label(Elem a) const override {
    return a == 0 ? "e" : "[" + parent.label(reps[a]) + "]";
  }
};

}  // namespace

FiniteGroup make_cyclic(int n) {
  if (n < 1 || n > FiniteGroup::order_cap)
    fail(ErrorKind::domain, "make_cyclic: n out of range");
  return FiniteGroup::adopt(std::make_shared<CyclicRep>(n));
}

FiniteGroup make_dihedral(int n) {
  if (n < 1 || 2LL * n > FiniteGroup::order_cap)
    fail(ErrorKind::domain, "make_dihedral: n out of range");
  return FiniteGroup::adopt(std::make_shared<DihedralRep>(n));
}

FiniteGroup make_symmetric(int n) {
  if (n < 1 || n > 6) fail(ErrorKind::domain, "make_symmetric supports 1 <= n <= 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  // lexicographic enumeration puts the identity first
  auto t = std::make_shared<TableRep>();
  t->order = static_cast<int>(perms.size());
  t->name = "S" + std::to_string(n);
  std::map<std::vector<int>, int> rank;
  for (int i = 0; i < t->order; ++i) rank[perms[i]] = i;
  t->table.resize(static_cast<std::size_t>(t->order) * t->order);
  t->invs.resize(t->order);
  t->labels.resize(t->order);
  for (int i = 0; i < t->order; ++i) {
    t->labels[i] = cycle_notation(perms[i]);
    std::vector<int> ip(n);
    for (int k = 0; k < n; ++k) ip[perms[i][k]] = k;
    t->invs[i] = rank[ip];
    for (int j = 0; j < t->order; ++j) {
      // product acts left-to-right: (ab)(x) = b(a(x))
      std::vector<int> pr(n);
      for (int k = 0; k < n; ++k) pr[k] = perms[j][perms[i][k]];
      t->table[i * t->order + j] = rank[pr];
    }
  }
  return FiniteGroup::adopt(t);
}

FiniteGroup make_quaternion8() {
  return FiniteGroup::adopt(std::make_shared<QuaternionRep>());
}

FiniteGroup make_unitriangular(int n, long long p) {
  if (n < 2 || n > 5) fail(ErrorKind::domain, "make_unitriangular supports 2 <= n <= 5");
  if (!is_prime(p)) fail(ErrorKind::domain, "make_unitriangular: p must be prime");
  long long ord = 1;
  for (int k = 0; k < n * (n - 1) / 2; ++k) {
    ord *= p;
    if (ord > FiniteGroup::order_cap)
      fail(ErrorKind::domain, "make_unitriangular: order exceeds the catalog cap");
  }
  return FiniteGroup::adopt(std::make_shared<UnitriangularRep>(n, p));
}

FiniteGroup make_heisenberg(long long p) { return make_unitriangular(3, p); }

FiniteGroup make_extraspecial(long long p, ExtraspecialKind kind) {
  if (!is_prime(p)) fail(ErrorKind::domain, "make_extraspecial: p must be prime");
  if (p == 2)
    return kind == ExtraspecialKind::exponent_p ? make_dihedral(4) : make_quaternion8();
  if (kind == ExtraspecialKind::exponent_p) return make_heisenberg(p);
  if (p * p * p > FiniteGroup::order_cap)
    fail(ErrorKind::domain, "make_extraspecial: order exceeds the catalog cap");
  return FiniteGroup::adopt(std::make_shared<SemidirectPSquaredRep>(p));
}

FiniteGroup make_burnside_2_3() {
  auto heis = std::make_shared<UnitriangularRep>(3, 3);
  heis->name = "B23";
  auto g = FiniteGroup::adopt(heis);
  for (Elem a = 0; a < g.order(); ++a)
    check(g.power(a, 3) == FiniteGroup::identity, "B23: exponent is not 3");
  return g;
}

FiniteGroup make_wreath_cyclic(long long p, int n) {
  if (!is_prime(p)) fail(ErrorKind::domain, "make_wreath_cyclic: p must be prime");
  if (n < 1) fail(ErrorKind::domain, "make_wreath_cyclic: n must be positive");
  long long ord = n;
  for (int i = 0; i < n; ++i) {
    ord *= p;
    if (ord > FiniteGroup::order_cap)
      fail(ErrorKind::domain, "make_wreath_cyclic: order exceeds the catalog cap");
  }
  return FiniteGroup::adopt(std::make_shared<WreathRep>(p, n));
}

FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  if (static_cast<long long>(a.order()) * b.order() > FiniteGroup::order_cap)
    fail(ErrorKind::domain, "make_direct_product: order exceeds the catalog cap");
  return FiniteGroup::adopt(std::make_shared<DirectProductRep>(a, b));
}

FiniteGroup group_from_cayley_json(const std::string& text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("bad group JSON: ") + e.what());
  }
  if (!j.contains("order") || !j.contains("mul"))
    fail(ErrorKind::parse, "group JSON needs \"order\" and \"mul\"");
  int n = j["order"].get<int>();
  if (n < 1 || n > FiniteGroup::table_threshold)
    fail(ErrorKind::domain, "loaded groups must have 1 <= order <= 4096");
  auto t = std::make_shared<TableRep>();
  t->order = n;
  t->name = name;
  t->table.assign(static_cast<std::size_t>(n) * n, 0);
  const auto& rows = j["mul"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    fail(ErrorKind::parse, "group JSON: \"mul\" must be an order x order array");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      fail(ErrorKind::parse, "group JSON: ragged multiplication table");
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b].get<int>();
      if (v < 0 || v >= n) fail(ErrorKind::parse, "group JSON: entry out of range");
      t->table[a * n + b] = v;
    }
  }
  t->labels.resize(n);
  if (j.contains("labels")) {
    for (int a = 0; a < n && a < static_cast<int>(j["labels"].size()); ++a)
      t->labels[a] = j["labels"][a].get<std::string>();
  }
  for (int a = 0; a < n; ++a)
    if (t->labels[a].empty()) t->labels[a] = a == 0 ? "e" : "g" + std::to_string(a);
  t->invs.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t->table[a * n + b] == 0) t->invs[a] = b;
  for (int a = 0; a < n; ++a)
    if (t->invs[a] < 0) fail(ErrorKind::domain, "group JSON: some element has no inverse");
  return FiniteGroup::adopt(t);  // validation proves the axioms
}

std::string group_to_cayley_json(const FiniteGroup& g) {
  nlohmann::json j;
  int n = g.order();
  j["order"] = n;
  auto rows = nlohmann::json::array();
  for (Elem a = 0; a < n; ++a) {
    auto row = nlohmann::json::array();
    for (Elem b = 0; b < n; ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["mul"] = std::move(rows);
  auto labels = nlohmann::json::array();
  for (Elem a = 0; a < n; ++a) labels.push_back(g.label(a));
  j["labels"] = std::move(labels);
  return j.dump();
}

// ---------------------------------------------------------------------------
// Subgroup machinery

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{g, {FiniteGroup::identity}};
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{g, std::move(all)};
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& generators) {
  std::vector<bool> in(g.order(), false);
  in[FiniteGroup::identity] = true;
  std::vector<Elem> queue{FiniteGroup::identity};
  std::vector<Elem> step;
  step.reserve(generators.size() * 2);
  for (Elem s : generators) {
    step.push_back(s);
    step.push_back(g.inv(s));
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elem x = queue[qi];
    for (Elem s : step) {
      Elem y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Elem> sorted;
  for (Elem x = 0; x < g.order(); ++x)
    if (in[x]) sorted.push_back(x);
  return Subgroup{g, std::move(sorted)};
}

Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& generators) {
  std::vector<Elem> conj;
  conj.reserve(generators.size() * g.order());
  for (Elem s : generators)
    for (Elem x = 0; x < g.order(); ++x) conj.push_back(g.conjugate(s, x));
  std::sort(conj.begin(), conj.end());
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());
  return subgroup_closure(g, conj);
}

Subgroup centralizer(const FiniteGroup& g, Elem x) {
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a)
    if (g.mul(a, x) == g.mul(x, a)) out.push_back(a);
  return Subgroup{g, std::move(out)};
}

std::vector<Elem> conjugacy_class(const FiniteGroup& g, Elem x) {
  std::set<Elem> cls;
  for (Elem a = 0; a < g.order(); ++a) cls.insert(g.conjugate(x, a));
  return {cls.begin(), cls.end()};
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    auto cls = conjugacy_class(g, x);
    for (Elem y : cls) seen[y] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_normal(const Subgroup& s) {
  const auto& g = s.parent;
  for (Elem x : s.elements)
    for (Elem a = 0; a < g.order(); ++a)
      if (!s.contains(g.conjugate(x, a))) return false;
  return true;
}

std::vector<Subgroup> all_normal_subgroups(const FiniteGroup& g) {
  // atoms: normal closures of single elements; then close under joins
  std::set<std::vector<Elem>> found;
  found.insert(trivial_subgroup(g).elements);
  for (Elem x = 0; x < g.order(); ++x)
    found.insert(normal_closure(g, {x}).elements);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Elem>> snapshot(found.begin(), found.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<Elem> un;
        std::set_union(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                       snapshot[j].end(), std::back_inserter(un));
        auto join = subgroup_closure(g, un).elements;
        if (found.insert(join).second) grew = true;
      }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(Subgroup{g, e});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::pair(a.order(), a.elements) < std::pair(b.order(), b.elements);
  });
  return out;
}

QuotientResult quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(n)) fail(ErrorKind::domain, "quotient: subgroup is not normal");
  int order = g.order();
  std::vector<Elem> coset_min(order, -1);
  for (Elem x = 0; x < order; ++x) {
    if (coset_min[x] >= 0) continue;
    Elem lo = x;  // ids scanned in order, so x is the coset minimum
    for (Elem h : n.elements) coset_min[g.mul(x, h)] = lo;
  }
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x)
    if (coset_min[x] == x) reps.push_back(x);
  auto rep = std::make_shared<QuotientRep>();
  rep->order = static_cast<int>(reps.size());
  rep->name = g.name() + "/N" + std::to_string(n.order());
  rep->parent = g;
  rep->reps = reps;
  rep->coset_of.resize(order);
  for (Elem x = 0; x < order; ++x) {
    auto it = std::lower_bound(reps.begin(), reps.end(), coset_min[x]);
    rep->coset_of[x] = static_cast<Elem>(it - reps.begin());
  }
  QuotientResult out;
  out.projection = rep->coset_of;
  out.group = FiniteGroup::adopt(std::move(rep));
  return out;
}

namespace {

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  std::set<Elem> gens;
  for (Elem x : a.elements)
    for (Elem y : b.elements) gens.insert(g.comm(x, y));
  return subgroup_closure(g, {gens.begin(), gens.end()});
}

}  // namespace

SeriesReport lower_central_series(const FiniteGroup& g) {
  SeriesReport r{SeriesReport::Kind::lower_central, {whole_group(g)}};
  for (;;) {
    Subgroup next = commutator_subgroup(g, r.terms.back(), whole_group(g));
    if (next == r.terms.back()) break;
    r.terms.push_back(std::move(next));
    if (r.terms.back().order() == 1) break;
  }
  return r;
}

SeriesReport derived_series(const FiniteGroup& g) {
  SeriesReport r{SeriesReport::Kind::derived, {whole_group(g)}};
  for (;;) {
    Subgroup next = commutator_subgroup(g, r.terms.back(), r.terms.back());
    if (next == r.terms.back()) break;
    r.terms.push_back(std::move(next));
    if (r.terms.back().order() == 1) break;
  }
  return r;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  auto s = lower_central_series(g);
  if (s.terms.back().order() != 1) return std::nullopt;
  return static_cast<int>(s.terms.size()) - 1;  // trivial group has class 0
}

long long exponent(const FiniteGroup& g) {
  long long e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = std::lcm(e, (long long)g.element_order(x));
  return e;
}

std::map<long long, Subgroup> sylow_decomposition(const FiniteGroup& g) {
  if (!nilpotency_class(g))
    fail(ErrorKind::domain, "sylow_decomposition requires a nilpotent group");
  // H_p collects the elements of p-power order; elements of mixed order are
  // products of their prime parts and do not enter any factor directly.
  std::map<long long, std::vector<Elem>> parts;
  for (Elem x = 0; x < g.order(); ++x) {
    int ord = g.element_order(x);
    if (ord == 1) continue;
    long long p = 2;
    while (ord % p != 0) ++p;
    long long q = ord;
    while (q % p == 0) q /= p;
    if (q == 1) parts[p].push_back(x);
  }
  std::map<long long, Subgroup> out;
  long long prod = 1;
  for (auto& [p, elems] : parts) {
    elems.push_back(FiniteGroup::identity);
    std::sort(elems.begin(), elems.end());
    Subgroup h{g, elems};
    check(subgroup_closure(g, elems).elements == elems,
          "sylow_decomposition: p-part is not closed");
    prod *= h.order();
    out.emplace(p, std::move(h));
  }
  if (out.empty()) {
    check(g.order() == 1, "sylow_decomposition: empty partition of nontrivial group");
  } else {
    check(prod == g.order(), "sylow_decomposition: orders do not multiply up");
    for (auto it1 = out.begin(); it1 != out.end(); ++it1)
      for (auto it2 = std::next(it1); it2 != out.end(); ++it2)
        for (Elem x : it1->second.elements)
          for (Elem y : it2->second.elements)
            check(g.mul(x, y) == g.mul(y, x),
                  "sylow_decomposition: factors fail to commute");
  }
  return out;
}

}  // namespace verbal
