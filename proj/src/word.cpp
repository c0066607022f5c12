#include "verbal/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace verbal {

namespace {

std::vector<std::string> merge_alphabets(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

}  // namespace

Word::Word(FreeWord<std::string> body, std::vector<std::string> alphabet)
    : body_(std::move(body)), alphabet_(std::move(alphabet)) {
  for (const auto& l : body_.letters()) {
    if (std::find(alphabet_.begin(), alphabet_.end(), l.sym) == alphabet_.end())
      fail(ErrorKind::domain, "word uses variable '" + l.sym +
                                  "' outside its declared alphabet");
  }
}

std::vector<long long> Word::exponent_vector() const {
  auto ab = body_.abelianization();
  std::vector<long long> out;
  out.reserve(alphabet_.size());
  for (const auto& v : alphabet_) {
    auto it = ab.find(v);
    out.push_back(it == ab.end() ? 0 : it->second);
  }
  return out;
}

Word Word::operator*(const Word& other) const {
  return Word(body_ * other.body_, merge_alphabets(alphabet_, other.alphabet_));
}

Word Word::inverse() const { return Word(body_.inverse(), alphabet_); }

Word Word::pow(long long n) const { return Word(body_.pow(n), alphabet_); }

std::string Word::str() const {
  if (body_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : body_.letters()) {
    if (!first) os << '*';
    first = false;
    os << l.sym;
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

Word commutator(const Word& a, const Word& b) {
  return a.inverse() * b.inverse() * a * b;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& alphabet;
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

  // Longest alphabet name matching at the current position.
  std::optional<std::string> match_variable() {
    skip_ws();
    std::size_t best = 0;
    const std::string* found = nullptr;
    for (const auto& v : alphabet) {
      if (v.size() > best && text.compare(pos, v.size(), v) == 0) {
        best = v.size();
        found = &v;
      }
    }
    if (!found) return std::nullopt;
    pos += best;
    return *found;
  }

  FreeWord<std::string> parse_product(char terminator) {
    FreeWord<std::string> acc;
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

  FreeWord<std::string> parse_factor() {
    FreeWord<std::string> base = parse_atom();
    while (peek() == '^') {
      ++pos;
      base = base.pow(parse_int());
    }
    return base;
  }

  FreeWord<std::string> parse_atom() {
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
      std::vector<FreeWord<std::string>> parts;
      parts.push_back(parse_product(']'));
      while (eat(',')) parts.push_back(parse_product(']'));
      if (!eat(']')) error("expected ']'");
      if (parts.size() < 2) error("commutator bracket needs at least two entries");
      FreeWord<std::string> acc = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i)
        acc = FreeWord<std::string>::commutator(acc, parts[i]);
      return acc;
    }
    if (auto v = match_variable()) return FreeWord<std::string>::generator(*v);
    if (c == '\0') error("unexpected end of input");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::size_t save = pos;
      pos = start;
      std::string name = text.substr(start, save - start);
      error("unknown variable '" + name + "'");
    }
    error(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& alphabet) {
  Parser p{text, alphabet};
  auto body = p.parse_product('\0');
  p.skip_ws();
  if (p.pos != text.size()) p.error("trailing input");
  return Word(std::move(body), alphabet);
}

// ---------------------------------------------------------------------------
// Commutator trees

CommutatorTree CommutatorTree::leaf(std::string var) {
  CommutatorTree t;
  t.var_ = std::move(var);
  return t;
}

CommutatorTree CommutatorTree::bracket(CommutatorTree left, CommutatorTree right) {
  CommutatorTree t;
  t.left_ = std::make_shared<CommutatorTree>(std::move(left));
  t.right_ = std::make_shared<CommutatorTree>(std::move(right));
  return t;
}

std::vector<std::string> CommutatorTree::leaves() const {
  std::vector<std::string> out;
  if (is_leaf()) {
    out.push_back(var_);
    return out;
  }
  auto l = left_->leaves();
  auto r = right_->leaves();
  out.insert(out.end(), l.begin(), l.end());
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

Word CommutatorTree::expand() const {
  if (is_leaf()) {
    return Word(FreeWord<std::string>::generator(var_), {var_});
  }
  Word l = left_->expand();
  Word r = right_->expand();
  return commutator(l, r);
}

std::string CommutatorTree::str() const {
  if (is_leaf()) return var_;
  return "[" + left_->str() + "," + right_->str() + "]";
}

std::string CommutatorTree::to_json() const {
  nlohmann::json j;
  if (is_leaf()) {
    j["v"] = var_;
  } else {
    j["c"] = nlohmann::json::array({nlohmann::json::parse(left_->to_json()),
                                    nlohmann::json::parse(right_->to_json())});
  }
  return j.dump();
}

namespace {

CommutatorTree tree_from_json(const nlohmann::json& j) {
  if (j.contains("v")) return CommutatorTree::leaf(j["v"].get<std::string>());
  if (j.contains("c")) {
    const auto& arr = j["c"];
    if (!arr.is_array() || arr.size() != 2)
      fail(ErrorKind::parse, "tree node \"c\" must hold exactly two children");
    return CommutatorTree::bracket(tree_from_json(arr[0]), tree_from_json(arr[1]));
  }
  fail(ErrorKind::parse, "tree node must contain \"v\" or \"c\"");
}

}  // namespace

CommutatorTree CommutatorTree::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::parse, std::string("bad tree JSON: ") + e.what());
  }
  return tree_from_json(j);
}

bool CommutatorTree::operator==(const CommutatorTree& o) const {
  if (is_leaf() != o.is_leaf()) return false;
  if (is_leaf()) return var_ == o.var_;
  return *left_ == *o.left_ && *right_ == *o.right_;
}

bool is_multilinear_commutator(const CommutatorTree& tree) {
  auto ls = tree.leaves();
  std::sort(ls.begin(), ls.end());
  return std::adjacent_find(ls.begin(), ls.end()) == ls.end();
}

namespace {

std::string xvar(int i) { return "x" + std::to_string(i); }

}  // namespace

CommutatorTree gamma_word(int k) {
  if (k < 1) fail(ErrorKind::domain, "gamma_word requires k >= 1");
  CommutatorTree t = CommutatorTree::leaf(xvar(1));
  for (int i = 2; i <= k; ++i)
    t = CommutatorTree::bracket(std::move(t), CommutatorTree::leaf(xvar(i)));
  return t;
}

namespace {

CommutatorTree delta_on(int k, int first) {
  if (k == 0) return CommutatorTree::leaf(xvar(first));
  int half = 1 << (k - 1);
  return CommutatorTree::bracket(delta_on(k - 1, first), delta_on(k - 1, first + half));
}

}  // namespace

CommutatorTree delta_word(int k) {
  if (k < 0) fail(ErrorKind::domain, "delta_word requires k >= 0");
  return delta_on(k, 1);
}

Word engel_word(int n) {
  if (n < 1) fail(ErrorKind::domain, "engel_word requires n >= 1");
  std::vector<std::string> ab{"x", "y"};
  Word acc(FreeWord<std::string>::generator("x"), ab);
  Word y(FreeWord<std::string>::generator("y"), ab);
  for (int i = 0; i < n; ++i) acc = commutator(acc, y);
  return acc;
}

AbelianSplit abelian_split(const Word& w) {
  AbelianSplit out;
  auto exps = w.exponent_vector();
  FreeWord<std::string> u;
  long long g = 0;
  for (std::size_t i = 0; i < w.alphabet().size(); ++i) {
    out.exponents[w.alphabet()[i]] = exps[i];
    u.push(w.alphabet()[i], exps[i]);
    g = std::gcd(g, exps[i]);
  }
  out.gcd_m = g;
  out.commutator_part = Word(u.inverse() * w.body(), w.alphabet());
  for (auto [var, e] : out.commutator_part.body().abelianization()) {
    (void)var;
    check(e == 0, "abelian_split: commutator part is not in the derived subgroup");
  }
  return out;
}

Word tilde_v_word(long long m) {
  if (m < 0) fail(ErrorKind::domain, "tilde_v_word requires m >= 0");
  std::vector<std::string> ab{"x1", "x2"};
  auto x1 = FreeWord<std::string>::generator("x1");
  auto x2 = FreeWord<std::string>::generator("x2");
  return Word((x1 * x2).pow(-m) * x1.pow(m) * x2.pow(m), ab);
}

}  // namespace verbal
