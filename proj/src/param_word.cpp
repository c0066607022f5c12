#include "verbal/param_word.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace verbal {

std::string ParamSymbol::str() const {
  if (kind == Kind::xi) return "xi{" + handle + "}";
  return "eta{" + std::to_string(q) + "," + std::to_string(copy) + "}";
}

ParamWord::ParamWord(FreeWord<ParamSymbol> body, int valence)
    : body_(std::move(body)), valence_(valence) {
  if (valence < 0) fail(ErrorKind::domain, "param word valence must be >= 0");
  for (const auto& l : body_.letters())
    if (l.sym.is_eta() && (l.sym.q < 1 || l.sym.q > valence))
      fail(ErrorKind::domain, "eta coordinate " + std::to_string(l.sym.q) +
                                  " outside valence " + std::to_string(valence));
}

ParamWord ParamWord::operator*(const ParamWord& o) const {
  return ParamWord(body_ * o.body_, std::max(valence_, o.valence_));
}

int ParamWord::degree() const {
  std::set<ParamSymbol> etas;
  for (const auto& l : body_.letters())
    if (l.sym.is_eta()) etas.insert(l.sym);
  return static_cast<int>(etas.size());
}

std::vector<ParamSymbol> ParamWord::symbols() const {
  std::set<ParamSymbol> syms;
  for (const auto& l : body_.letters()) syms.insert(l.sym);
  return {syms.begin(), syms.end()};
}

std::string ParamWord::str() const {
  if (body_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : body_.letters()) {
    if (!first) os << '*';
    first = false;
    os << l.sym.str();
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

ParamWord eta_deleted(const ParamWord& w) {
  FreeWord<ParamSymbol> out;
  for (const auto& l : w.body().letters())
    if (!l.sym.is_eta()) out.push(l.sym, l.exp);
  return ParamWord(std::move(out), w.valence());
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct PwParser {
  const std::string& text;
  int valence;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::parse,
         msg + " at position " + std::to_string(pos) + " in \"" + text + "\"");
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  long long parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits) error("expected integer");
    return std::stoll(text.substr(start, pos - start));
  }

  FreeWord<ParamSymbol> parse_product(char terminator) {
    FreeWord<ParamSymbol> acc;
    for (;;) {
      char c = peek();
      if (c == '\0' || c == terminator || c == ',') break;
      if (c == '*') {
        ++pos;
        continue;
      }
      acc.append(parse_factor());
    }
    return acc;
  }

  FreeWord<ParamSymbol> parse_factor() {
    FreeWord<ParamSymbol> base = parse_atom();
    while (peek() == '^') {
      ++pos;
      base = base.pow(parse_int());
    }
    return base;
  }

  FreeWord<ParamSymbol> parse_atom() {
    char c = peek();
    if (c == '1') {
      ++pos;
      return {};
    }
    if (c == '(') {
      ++pos;
      auto inner = parse_product(')');
      if (!eat(')')) error("expected ')'");
      return inner;
    }
    if (c == '[') {
      ++pos;
      std::vector<FreeWord<ParamSymbol>> parts;
      parts.push_back(parse_product(']'));
      while (eat(',')) parts.push_back(parse_product(']'));
      if (!eat(']')) error("expected ']'");
      if (parts.size() < 2) error("commutator bracket needs at least two entries");
      FreeWord<ParamSymbol> acc = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i)
        acc = FreeWord<ParamSymbol>::commutator(acc, parts[i]);
      return acc;
    }
    if (text.compare(pos, 3, "xi{") == 0) {
      pos += 3;
      std::size_t end = text.find('}', pos);
      if (end == std::string::npos) error("unterminated xi{...}");
      std::string h = text.substr(pos, end - pos);
      if (h.empty()) error("empty xi handle");
      pos = end + 1;
      return FreeWord<ParamSymbol>::generator(ParamSymbol::xi(h));
    }
    if (text.compare(pos, 4, "eta{") == 0) {
      pos += 4;
      long long q = parse_int();
      if (!eat(',')) error("expected ',' in eta{q,i}");
      long long i = parse_int();
      if (!eat('}')) error("expected '}' in eta{q,i}");
      if (q < 1 || i < 1) error("eta indices must be positive");
      return FreeWord<ParamSymbol>::generator(
          ParamSymbol::eta(static_cast<int>(q), static_cast<int>(i)));
    }
    error(c == '\0' ? "unexpected end of input"
                    : std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

ParamWord parse_param_word(const std::string& text, int valence) {
  PwParser p{text, valence};
  auto body = p.parse_product('\0');
  p.skip_ws();
  if (p.pos != text.size()) p.error("trailing input");
  return ParamWord(std::move(body), valence);
}

// ---------------------------------------------------------------------------
// Elementary commutators and E-products

int ElemCommutator::degree() const {
  std::set<ParamSymbol> etas;
  for (const auto& s : entries)
    if (s.is_eta()) etas.insert(s);
  return static_cast<int>(etas.size());
}

ParamWord ElemCommutator::expand() const {
  FreeWord<ParamSymbol> acc = FreeWord<ParamSymbol>::generator(entries[0]);
  for (std::size_t i = 1; i < entries.size(); ++i)
    acc = FreeWord<ParamSymbol>::commutator(acc,
                                            FreeWord<ParamSymbol>::generator(entries[i]));
  return ParamWord(std::move(acc), valence);
}

std::string ElemCommutator::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) os << ',';
    os << entries[i].str();
  }
  os << ']';
  return os.str();
}

ElemCommutator make_elem_commutator(std::vector<ParamSymbol> entries, int valence) {
  if (entries.size() < 2)
    fail(ErrorKind::domain, "elementary commutator needs weight >= 2");
  std::set<ParamSymbol> seen;
  for (const auto& s : entries) {
    if (!s.is_eta()) continue;
    if (!seen.insert(s).second)
      fail(ErrorKind::domain, "elementary commutator repeats " + s.str());
    if (s.q < 1 || s.q > valence)
      fail(ErrorKind::domain, "eta coordinate outside valence");
  }
  return ElemCommutator{std::move(entries), valence};
}

ParamWord EProduct::product() const {
  ParamWord acc(FreeWord<ParamSymbol>{}, valence);
  for (const auto& f : factors) acc = acc * f.expand();
  return acc;
}

// ---------------------------------------------------------------------------
// Symbol coding for the collection engine

namespace {

struct SymbolCoder {
  std::vector<ParamSymbol> table;  // id -> symbol

  static SymbolCoder over(const std::vector<ParamSymbol>& syms) {
    return SymbolCoder{syms};
  }
  int id(const ParamSymbol& s) const {
    auto it = std::lower_bound(table.begin(), table.end(), s);
    check(it != table.end() && *it == s, "symbol coder: unknown symbol");
    return static_cast<int>(it - table.begin());
  }
  FreeWord<int> encode(const ParamWord& w) const {
    FreeWord<int> out;
    for (const auto& l : w.body().letters()) out.push(id(l.sym), l.exp);
    return out;
  }
};

}  // namespace

int k_of(const ElemCommutator& e, int c) {
  int n = e.weight();
  if (n >= c + 1) return c + 1;
  std::set<ParamSymbol> sym_set(e.entries.begin(), e.entries.end());
  std::vector<ParamSymbol> syms(sym_set.begin(), sym_set.end());
  SymbolCoder coder = SymbolCoder::over(syms);
  std::vector<int> seq;
  seq.reserve(e.entries.size());
  for (const auto& s : e.entries) seq.push_back(coder.id(s));
  // Degree-n part of the Magnus expansion of a weight-n commutator is the
  // matching Lie bracket; nonzero pins the filtration level at n.
  if (!lie_left_normed(seq).empty()) return n;
  return filtration_level(coder.encode(e.expand()), c + 1);
}

LengthValue length_of(const ElemCommutator& e, int c) {
  return LengthValue{c + 1 - k_of(e, c), e.degree()};
}

// ---------------------------------------------------------------------------
// Substitution

Elem substitute(const ParamWord& w, const FiniteGroup& g, const ParamEnv& env,
                const std::vector<Elem>& coords) {
  Elem acc = FiniteGroup::identity;
  for (const auto& l : w.body().letters()) {
    Elem v;
    if (l.sym.is_eta()) {
      if (l.sym.q < 1 || l.sym.q > static_cast<int>(coords.size()))
        fail(ErrorKind::domain, "substitute: tuple does not cover " + l.sym.str());
      v = coords[l.sym.q - 1];
    } else {
      auto it = env.find(l.sym.handle);
      if (it == env.end())
        fail(ErrorKind::domain, "substitute: unbound parameter xi{" + l.sym.handle + "}");
      v = it->second;
    }
    acc = g.mul(acc, g.power(v, l.exp));
  }
  return acc;
}

Elem substitute(const EProduct& ep, const FiniteGroup& g, const ParamEnv& env,
                const std::vector<Elem>& coords) {
  Elem acc = FiniteGroup::identity;
  for (const auto& f : ep.factors) {
    Elem cur = FiniteGroup::identity;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
      const auto& s = f.entries[i];
      Elem v;
      if (s.is_eta()) {
        if (s.q < 1 || s.q > static_cast<int>(coords.size()))
          fail(ErrorKind::domain, "substitute: tuple does not cover " + s.str());
        v = coords[s.q - 1];
      } else {
        auto it = env.find(s.handle);
        if (it == env.end())
          fail(ErrorKind::domain, "substitute: unbound parameter xi{" + s.handle + "}");
        v = it->second;
      }
      cur = i == 0 ? v : g.comm(cur, v);
    }
    acc = g.mul(acc, cur);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// E-product decomposition

namespace {

int max_eta_copy(const std::vector<ParamSymbol>& syms) {
  int m = 0;
  for (const auto& s : syms)
    if (s.is_eta()) m = std::max(m, s.copy);
  return m;
}

// Checks that all Magnus components of degrees 1..bound vanish.
bool in_gamma_above(const FreeWord<int>& w, int bound) {
  if (bound < 1) return true;
  NcPoly m = magnus_expansion(w, bound);
  for (int d = 1; d <= bound; ++d)
    if (!m.homogeneous(d).empty()) return false;
  return true;
}

}  // namespace

EProduct eproduct_decompose(const ParamWord& omega, int k, int c) {
  if (k < 2) fail(ErrorKind::domain, "eproduct_decompose requires k >= 2");
  if (c < 1) fail(ErrorKind::domain, "eproduct_decompose requires c >= 1");
  int valence = omega.valence();
  EProduct out{{}, valence};

  auto syms = omega.symbols();
  if (syms.empty()) return out;
  SymbolCoder coder = SymbolCoder::over(syms);
  int m = static_cast<int>(syms.size());

  FreeWord<int> coded = coder.encode(omega);
  if (!in_gamma_above(coded, std::min(k - 1, c)))
    fail(ErrorKind::domain, "eproduct_decompose: omega is not in gamma_k");
  FreeWord<int> deleted = coder.encode(eta_deleted(omega));
  if (!in_gamma_above(deleted, c))
    fail(ErrorKind::domain,
         "eproduct_decompose: omega does not vanish at the identity tuple");

  // Prepending the inverse of the eta-deleted part kills every parameter-only
  // monomial of the Magnus expansion, so no degree-0 factors can arise below;
  // the evaluation is unchanged in any group of class <= c.
  FreeWord<int> residual = deleted.inverse() * coded;

  int fresh_copy = max_eta_copy(syms) + 1;
  if (k > c) {
    check(in_gamma_above(residual, c), "eproduct_decompose: nontrivial deep residual");
    return out;
  }

  HallBasis basis(m, c);
  for (int level = k; level <= c; ++level) {
    NcPoly mg = magnus_expansion(residual, level);
    for (int d = 1; d < level; ++d)
      check(mg.homogeneous(d).empty(), "eproduct_decompose: residual escaped level");
    LieElem component = mg.homogeneous(level);
    if (component.empty()) continue;

    auto idxs = basis.indices_of_weight(level);
    std::vector<LieElem> cols;
    cols.reserve(idxs.size());
    for (int idx : idxs) cols.push_back(basis.lie(idx));
    std::vector<long long> coords = solve_integer_combination(cols, component);

    std::map<std::vector<int>, long long> combo;
    for (std::size_t j = 0; j < idxs.size(); ++j) {
      if (coords[j] == 0) continue;
      for (const auto& [seq, cc] : basis.left_normed_form(idxs[j])) {
        combo[seq] += coords[j] * cc;
        if (combo[seq] == 0) combo.erase(seq);
      }
    }

    FreeWord<int> peel;
    for (const auto& [seq, e] : combo) {
      if (lie_left_normed(seq).empty()) continue;  // contributes nothing
      std::vector<int> use = e > 0 ? seq : inverse_commutator_swap(seq);
      long long copies = e > 0 ? e : -e;
      for (long long cnt = 0; cnt < copies; ++cnt) {
        peel.append(left_normed_word(use));
        std::vector<ParamSymbol> entries;
        entries.reserve(use.size());
        std::set<ParamSymbol> seen;
        for (int sid : use) {
          ParamSymbol s = coder.table[sid];
          if (s.is_eta() && !seen.insert(s).second)
            s = ParamSymbol::eta(s.q, fresh_copy++);  // rename repeats, same map
          entries.push_back(s);
        }
        ElemCommutator factor{std::move(entries), valence};
        check(factor.degree() >= 1, "eproduct_decompose: degree-0 factor emitted");
        out.factors.push_back(std::move(factor));
      }
    }
    residual = peel.inverse() * residual;
  }
  check(in_gamma_above(residual, c), "eproduct_decompose: residual not in gamma_{c+1}");
  return out;
}

// ---------------------------------------------------------------------------
// Shift expansion

namespace {

ParamWord substitute_etas(const ElemCommutator& f, const std::vector<std::string>& b,
                          const std::set<ParamSymbol>& replace, bool keep_eta) {
  // replace: etas mapped to xi{b_q}; keep_eta additionally keeps the eta after
  // the parameter (the "bg" substitution eta -> xi{b_q} * eta).
  FreeWord<ParamSymbol> acc;
  bool first = true;
  for (const auto& s : f.entries) {
    FreeWord<ParamSymbol> letter;
    if (s.is_eta() && replace.count(s)) {
      letter.push(ParamSymbol::xi(b[s.q - 1]), 1);
      if (keep_eta) letter.push(s, 1);
    } else {
      letter.push(s, 1);
    }
    acc = first ? letter : FreeWord<ParamSymbol>::commutator(acc, letter);
    first = false;
  }
  return ParamWord(std::move(acc), f.valence);
}

}  // namespace

ShiftExpansion shift_expand(const EProduct& ep, const std::vector<std::string>& b_handles,
                            int c) {
  int valence = ep.valence;
  if (static_cast<int>(b_handles.size()) != valence)
    fail(ErrorKind::domain, "shift_expand: handle tuple must match the valence");

  ShiftExpansion out;
  out.shifted.valence = valence;

  ParamWord a_part(FreeWord<ParamSymbol>{}, valence);  // all etas -> xi{b_q}
  ParamWord b_part = ep.product();                     // the factors themselves
  ParamWord c_part(FreeWord<ParamSymbol>{}, valence);  // partial substitutions
  ParamWord d_part(FreeWord<ParamSymbol>{}, valence);  // eta -> xi{b_q} * eta

  int k_min = c + 1;
  for (const auto& f : ep.factors) {
    int d = f.degree();
    if (d < 1) fail(ErrorKind::domain, "shift_expand: degree-0 factor");
    k_min = std::min(k_min, k_of(f, c));

    std::vector<ParamSymbol> etas;  // distinct, in first-occurrence order
    for (const auto& s : f.entries)
      if (s.is_eta() && std::find(etas.begin(), etas.end(), s) == etas.end())
        etas.push_back(s);

    std::set<ParamSymbol> all(etas.begin(), etas.end());
    a_part = a_part * substitute_etas(f, b_handles, all, false);
    d_part = d_part * substitute_etas(f, b_handles, all, true);

    for (unsigned mask = 1; mask + 1 < (1u << d); ++mask) {
      std::set<ParamSymbol> chosen;
      for (int j = 0; j < d; ++j)
        if (mask & (1u << j)) chosen.insert(etas[j]);
      std::vector<ParamSymbol> entries;
      for (const auto& s : f.entries)
        entries.push_back(s.is_eta() && chosen.count(s)
                              ? ParamSymbol::xi(b_handles[s.q - 1])
                              : s);
      ElemCommutator sf{std::move(entries), valence};
      check(sf.degree() >= 1 && sf.degree() < d,
            "shift_expand: shifted factor degree out of range");
      c_part = c_part * sf.expand();
      out.shifted.factors.push_back(std::move(sf));
    }
  }

  // nu is the exact discrepancy; prove its filtration level and vanishing at 1.
  out.nu = (a_part * b_part * c_part).inverse() * d_part;
  check(eta_deleted(out.nu).empty(), "shift_expand: nu does not vanish at 1");
  if (!ep.factors.empty() && k_min <= c) {
    auto syms = out.nu.symbols();
    if (!syms.empty()) {
      SymbolCoder coder = SymbolCoder::over(syms);
      check(in_gamma_above(coder.encode(out.nu), std::min(k_min, c)),
            "shift_expand: remainder is not one level deeper");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Friendly decomposition

namespace {

nlohmann::json length_json(const LengthValue& l) {
  return nlohmann::json::array({l.co_k, l.deg});
}

}  // namespace

std::string FriendlyCertificate::to_json() const {
  nlohmann::json j;
  j["k"] = k;
  auto src = nlohmann::json::array();
  for (const auto& l : source_lengths) src.push_back(length_json(l));
  j["source_lengths"] = std::move(src);
  auto nu = nlohmann::json::array();
  for (const auto& l : nu_lengths) nu.push_back(length_json(l));
  j["nu_lengths"] = std::move(nu);
  j["max_source"] = source_empty ? nlohmann::json() : length_json(max_source);
  j["max_nu"] = nu_lengths.empty() ? nlohmann::json() : length_json(max_nu);
  j["strict_descent"] = strict_descent;
  return j.dump();
}

FriendlyDecomposition friendly_decompose(const ParamWord& omega, int c,
                                         const std::vector<std::string>& b_handles) {
  if (static_cast<int>(b_handles.size()) != omega.valence())
    fail(ErrorKind::domain, "friendly_decompose: handle tuple must match the valence");

  int k = c + 1;
  auto syms = omega.symbols();
  if (!syms.empty()) {
    SymbolCoder coder = SymbolCoder::over(syms);
    k = filtration_level(coder.encode(omega), c + 1);
  }
  if (k < 2)
    fail(ErrorKind::domain, "friendly_decompose: omega must lie in gamma_2");

  FriendlyDecomposition out;
  out.source = eproduct_decompose(omega, k, c);
  out.certificate.k = k;

  LengthValue least{0, 0};
  out.certificate.source_empty = out.source.empty();
  out.certificate.max_source = least;
  for (const auto& f : out.source.factors) {
    LengthValue l = length_of(f, c);
    out.certificate.source_lengths.push_back(l);
    out.certificate.max_source = std::max(out.certificate.max_source, l);
  }

  if (out.source.empty()) {
    out.nu_b = EProduct{{}, omega.valence()};
    out.certificate.max_nu = least;
    out.certificate.strict_descent = false;  // the minimal case cannot descend
    return out;
  }

  ShiftExpansion se = shift_expand(out.source, b_handles, c);
  int k_min = c + 1;
  for (const auto& f : out.source.factors) k_min = std::min(k_min, k_of(f, c));

  EProduct tail{{}, omega.valence()};
  if (k_min + 1 <= c + 1 && !se.nu.empty())
    tail = eproduct_decompose(se.nu, std::min(k_min + 1, c + 1), c);

  out.nu_b = se.shifted;
  out.nu_b.factors.insert(out.nu_b.factors.end(), tail.factors.begin(),
                          tail.factors.end());

  out.certificate.max_nu = least;
  for (const auto& f : out.nu_b.factors) {
    LengthValue l = length_of(f, c);
    out.certificate.nu_lengths.push_back(l);
    out.certificate.max_nu = std::max(out.certificate.max_nu, l);
  }
  out.certificate.strict_descent = out.certificate.max_nu < out.certificate.max_source;
  check(out.certificate.strict_descent,
        "friendly_decompose: length descent failed");
  return out;
}

F2CheckResult verify_F2(const ParamWord& omega, const EProduct& nu_b,
                        const std::vector<std::string>& b_handles,
                        const FiniteGroup& g, const ParamEnv& env,
                        const SampleSpec& sample) {
  int r = std::max(omega.valence(), nu_b.valence);
  if (static_cast<int>(b_handles.size()) != r)
    fail(ErrorKind::domain, "verify_F2: handle tuple must match the valence");
  std::vector<Elem> b(r);
  for (int q = 0; q < r; ++q) {
    auto it = env.find(b_handles[q]);
    if (it == env.end())
      fail(ErrorKind::domain, "verify_F2: unbound handle " + b_handles[q]);
    b[q] = it->second;
  }
  Elem wb = substitute(omega, g, env, b);

  auto check_one = [&](const std::vector<Elem>& gt) -> std::optional<std::string> {
    std::vector<Elem> bg(r);
    for (int q = 0; q < r; ++q) bg[q] = g.mul(b[q], gt[q]);
    Elem lhs = substitute(omega, g, env, bg);
    Elem rhs = g.mul(g.mul(wb, substitute(omega, g, env, gt)),
                     substitute(nu_b, g, env, gt));
    if (lhs == rhs) return std::nullopt;
    std::ostringstream os;
    os << "F2 fails at g = (";
    for (int q = 0; q < r; ++q) os << (q ? "," : "") << g.label(gt[q]);
    os << "), b = (";
    for (int q = 0; q < r; ++q) os << (q ? "," : "") << g.label(b[q]);
    os << "): " << g.label(lhs) << " != " << g.label(rhs);
    return os.str();
  };

  if (sample.sample) {
    auto [count, seed] = *sample.sample;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, g.order() - 1);
    std::vector<Elem> gt(r);
    for (int i = 0; i < count; ++i) {
      for (int q = 0; q < r; ++q) gt[q] = pick(rng);
      if (auto w = check_one(gt)) return {false, *w};
    }
    return {true, ""};
  }

  std::vector<Elem> gt(r, 0);
  for (;;) {
    if (auto w = check_one(gt)) return {false, *w};
    int pos = r - 1;
    while (pos >= 0) {
      if (++gt[pos] < g.order()) break;
      gt[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return {true, ""};
}

}  // namespace verbal
