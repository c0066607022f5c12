#include "verbal/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace verbal {

namespace {

std::string lowered(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

long long parse_num(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    fail(ErrorKind::parse, "bad group spec \"" + spec + "\"");
  }
}

}  // namespace

FiniteGroup group_by_name(const std::string& spec) {
  if (spec.find('.') != std::string::npos || spec.find('/') != std::string::npos) {
    std::ifstream in(spec);
    if (!in) fail(ErrorKind::parse, "cannot open group file \"" + spec + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    return group_from_cayley_json(buf.str(), spec);
  }
  std::string s;
  for (char c : lowered(spec)) {  // "UT(4,2)" means UT4_2
    if (c == ' ' || c == '(') continue;
    if (c == ')') continue;
    s += c == ',' ? '_' : c;
  }
  if (s == "q8") return make_quaternion8();
  if (s == "b23") return make_burnside_2_3();
  if (s.rfind("ut", 0) == 0) {
    auto us = s.find('_');
    if (us == std::string::npos) fail(ErrorKind::parse, "bad group spec \"" + spec + "\"");
    return make_unitriangular(static_cast<int>(parse_num(s.substr(2, us - 2), spec)),
                              parse_num(s.substr(us + 1), spec));
  }
  if (s.rfind("heis", 0) == 0) return make_heisenberg(parse_num(s.substr(4), spec));
  if (s.rfind("wr", 0) == 0) {
    auto us = s.find('_');
    if (us == std::string::npos) fail(ErrorKind::parse, "bad group spec \"" + spec + "\"");
    return make_wreath_cyclic(parse_num(s.substr(2, us - 2), spec),
                              static_cast<int>(parse_num(s.substr(us + 1), spec)));
  }
  if (s.rfind("es", 0) == 0 && s.size() > 2 && (s.back() == '+' || s.back() == '-')) {
    long long p = parse_num(s.substr(2, s.size() - 3), spec);
    return make_extraspecial(p, s.back() == '+' ? ExtraspecialKind::exponent_p
                                                : ExtraspecialKind::exponent_p_squared);
  }
  if (!s.empty() && s[0] == 'c') return make_cyclic(static_cast<int>(parse_num(s.substr(1), spec)));
  if (!s.empty() && s[0] == 'd')
    return make_dihedral(static_cast<int>(parse_num(s.substr(1), spec)));
  if (!s.empty() && s[0] == 's')
    return make_symmetric(static_cast<int>(parse_num(s.substr(1), spec)));
  fail(ErrorKind::parse, "unknown group \"" + spec + "\"");
}

std::vector<FiniteGroup> catalog_groups(int max_order) {
  std::vector<FiniteGroup> out;
  auto take = [&out, max_order](FiniteGroup g) {
    if (g.order() <= max_order) out.push_back(std::move(g));
  };
  for (int n = 1; n <= std::min(max_order, 32); ++n) take(make_cyclic(n));
  for (int n = 2; 2 * n <= std::min(max_order, 32); ++n) take(make_dihedral(n));
  for (int n = 3; n <= 6; ++n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    if (f <= max_order) take(make_symmetric(n));
  }
  if (max_order >= 8) take(make_quaternion8());
  for (long long p : {2, 3, 5}) {
    if (p * p * p <= max_order) {
      take(make_heisenberg(p));
      take(make_extraspecial(p, ExtraspecialKind::exponent_p_squared));
    }
  }
  if (max_order >= 64) take(make_unitriangular(4, 2));
  if (max_order >= 27) take(make_burnside_2_3());
  for (long long p : {2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      long long ord = n;
      for (int i = 0; i < n; ++i) ord *= p;
      if (ord <= max_order) take(make_wreath_cyclic(p, n));
    }
  }
  return out;
}

}  // namespace verbal
