#include "verbal/ncpoly.hpp"

namespace verbal {

void NcPoly::add_term(const Mono& m, long long c) {
  if (c == 0 || static_cast<int>(m.size()) > cap_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly r(cap_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      if (static_cast<int>(m1.size() + m2.size()) > cap_) continue;
      Mono m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

std::map<Mono, long long> NcPoly::homogeneous(int degree) const {
  std::map<Mono, long long> out;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == degree) out.emplace(m, c);
  return out;
}

int NcPoly::lowest_positive_degree() const {
  int best = cap_ + 1;
  for (const auto& [m, c] : terms_) {
    (void)c;
    int d = static_cast<int>(m.size());
    if (d >= 1 && d < best) best = d;
  }
  return best;
}

void NcPoly::mul_generator_power(int sym, long long e) {
  // (1 + X)^e with e < 0 expanded as sum_j (-X)^j, truncated at cap.
  long long k = e >= 0 ? e : -e;
  for (long long i = 0; i < k; ++i) {
    NcPoly factor(cap_);
    factor.add_term(Mono{}, 1);
    Mono m;
    long long sign = 1;
    for (int d = 1; d <= cap_; ++d) {
      m.push_back(sym);
      if (e < 0) sign = -sign;
      factor.add_term(m, e >= 0 ? 1 : sign);
      if (e >= 0 && d >= 1) break;  // (1 + X) itself: only the linear term
    }
    *this = *this * factor;
  }
}

NcPoly magnus_expansion(const FreeWord<int>& w, int cap) {
  NcPoly p = NcPoly::one(cap);
  for (const auto& l : w.letters()) p.mul_generator_power(l.sym, l.exp);
  return p;
}

LieElem lie_bracket(const LieElem& a, const LieElem& b) {
  LieElem out;
  auto add = [&out](Mono m, long long c) {
    auto it = out.find(m);
    if (it == out.end()) {
      if (c != 0) out.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [m1, c1] : a) {
    for (const auto& [m2, c2] : b) {
      Mono ab = m1;
      ab.insert(ab.end(), m2.begin(), m2.end());
      Mono ba = m2;
      ba.insert(ba.end(), m1.begin(), m1.end());
      add(std::move(ab), c1 * c2);
      add(std::move(ba), -c1 * c2);
    }
  }
  return out;
}

LieElem lie_generator(int sym) { return LieElem{{Mono{sym}, 1}}; }

LieElem lie_left_normed(const std::vector<int>& seq) {
  check(!seq.empty(), "lie_left_normed: empty sequence");
  LieElem acc = lie_generator(seq[0]);
  for (std::size_t i = 1; i < seq.size(); ++i)
    acc = lie_bracket(acc, lie_generator(seq[i]));
  return acc;
}

void accumulate_left_normed_product(const std::vector<int>& p,
                                    const std::vector<int>& q, long long coeff,
                                    std::map<std::vector<int>, long long>& out) {
  if (coeff == 0) return;
  if (q.size() == 1) {
    std::vector<int> seq = p;
    seq.push_back(q[0]);
    auto it = out.find(seq);
    if (it == out.end()) {
      out.emplace(std::move(seq), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) out.erase(it);
    }
    return;
  }
  // [P,[Q',t]] = [[P,Q'],t] - [[P,t],Q']
  std::vector<int> qp(q.begin(), q.end() - 1);
  int t = q.back();
  std::map<std::vector<int>, long long> inner;
  accumulate_left_normed_product(p, qp, 1, inner);
  for (const auto& [seq, c] : inner) {
    std::vector<int> ext = seq;
    ext.push_back(t);
    auto it = out.find(ext);
    if (it == out.end()) {
      if (coeff * c != 0) out.emplace(std::move(ext), coeff * c);
    } else {
      it->second += coeff * c;
      if (it->second == 0) out.erase(it);
    }
  }
  std::vector<int> pt = p;
  pt.push_back(t);
  accumulate_left_normed_product(pt, qp, -coeff, out);
}

}  // namespace verbal
