#include "verbal/word_values.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace verbal {

namespace {

std::vector<std::string> occurring_variables(const Word& w) {
  std::vector<std::string> occ;
  for (const auto& v : w.alphabet()) {
    bool used = false;
    for (const auto& l : w.body().letters())
      if (l.sym == v) {
        used = true;
        break;
      }
    if (used) occ.push_back(v);
  }
  return occ;
}

// Odometer over index vectors; calls fn for every tuple, row-major.
template <class Fn>
void for_each_tuple(const std::vector<int>& radii, Fn&& fn) {
  std::vector<int> idx(radii.size(), 0);
  for (;;) {
    fn(idx);
    int pos = static_cast<int>(radii.size()) - 1;
    while (pos >= 0) {
      if (++idx[pos] < radii[pos]) break;
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

void budget_check(const std::vector<int>& radii, const EnumBudget& budget,
                  const std::string& who) {
  unsigned __int128 total = 1;
  for (int r : radii) {
    total *= static_cast<unsigned>(r);
    if (total > budget.max_tuples)
      fail(ErrorKind::budget, who + ": tuple enumeration exceeds the budget");
  }
}

}  // namespace

Elem evaluate(const Word& w, const FiniteGroup& g, const Assignment& a) {
  const auto& names = w.alphabet();
  if (a.values.size() != names.size())
    fail(ErrorKind::domain, "evaluate: assignment does not cover the alphabet");
  if (!a.domains.empty()) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (a.domains[i] && !a.domains[i]->contains(a.values[i]))
        fail(ErrorKind::domain,
             "evaluate: value for '" + names[i] + "' lies outside its domain");
  }
  Elem acc = FiniteGroup::identity;
  for (const auto& l : w.body().letters()) {
    auto it = std::find(names.begin(), names.end(), l.sym);
    Elem v = a.values[it - names.begin()];
    acc = g.mul(acc, g.power(v, l.exp));
  }
  return acc;
}

std::vector<Elem> value_set(const Word& w, const FiniteGroup& g,
                            const std::vector<std::optional<Subgroup>>& domains,
                            const EnumBudget& budget) {
  const auto& names = w.alphabet();
  if (!domains.empty() && domains.size() != names.size())
    fail(ErrorKind::domain, "value_set: domains must match the alphabet");
  auto occ = occurring_variables(w);

  std::vector<std::vector<Elem>> pools;
  bool full_domains = true;
  for (const auto& v : occ) {
    std::size_t ai = std::find(names.begin(), names.end(), v) - names.begin();
    if (!domains.empty() && domains[ai]) {
      full_domains = full_domains && domains[ai]->is_whole_group();
      pools.push_back(domains[ai]->elements);
    } else {
      std::vector<Elem> all(g.order());
      std::iota(all.begin(), all.end(), 0);
      pools.push_back(std::move(all));
    }
  }

  std::set<Elem> out;
  if (occ.empty()) {
    out.insert(FiniteGroup::identity);
    return {out.begin(), out.end()};
  }

  // Restricting the first variable to class representatives is sound on full
  // domains: w(g_1,...,g_r)^c = w(g_1^c,...,g_r^c), so closing the collected
  // values under conjugation recovers the whole set.
  bool prune = full_domains && g.order() > 1;
  if (prune) {
    std::vector<Elem> reps;
    for (const auto& cls : conjugacy_classes(g)) reps.push_back(cls.front());
    pools[0] = std::move(reps);
  }

  std::vector<int> radii;
  radii.reserve(pools.size());
  for (const auto& p : pools) radii.push_back(static_cast<int>(p.size()));
  budget_check(radii, budget, "value_set");

  // evaluation plan: letter -> (occurring-variable index, exponent)
  std::vector<std::pair<int, long long>> plan;
  for (const auto& l : w.body().letters()) {
    int oi = static_cast<int>(std::find(occ.begin(), occ.end(), l.sym) - occ.begin());
    plan.emplace_back(oi, l.exp);
  }

  std::vector<Elem> vals(pools.size());
  for_each_tuple(radii, [&](const std::vector<int>& idx) {
    for (std::size_t i = 0; i < pools.size(); ++i) vals[i] = pools[i][idx[i]];
    Elem acc = FiniteGroup::identity;
    for (const auto& [oi, e] : plan) acc = g.mul(acc, g.power(vals[oi], e));
    out.insert(acc);
  });

  if (prune) {
    std::vector<Elem> frontier(out.begin(), out.end());
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem v : frontier)
        for (Elem c = 0; c < g.order(); ++c) {
          Elem u = g.conjugate(v, c);
          if (out.insert(u).second) next.push_back(u);
        }
      frontier = std::move(next);
    }
  }
  return {out.begin(), out.end()};
}

Subgroup verbal_subgroup(const Word& w, const FiniteGroup& g, const EnumBudget& budget) {
  auto values = value_set(w, g, {}, budget);
  Subgroup s = subgroup_closure(g, values);
  check(is_normal(s), "verbal_subgroup: closure of a value set must be normal");
  return s;
}

Elem evaluate_tree(const CommutatorTree& tree, const FiniteGroup& g,
                   const std::vector<Elem>& leaf_values) {
  std::size_t cursor = 0;
  auto rec = [&](auto&& self, const CommutatorTree& t) -> Elem {
    if (t.is_leaf()) {
      check(cursor < leaf_values.size(), "evaluate_tree: not enough leaf values");
      return leaf_values[cursor++];
    }
    Elem l = self(self, t.left());
    Elem r = self(self, t.right());
    return g.comm(l, r);
  };
  Elem out = rec(rec, tree);
  check(cursor == leaf_values.size(), "evaluate_tree: leaf count mismatch");
  return out;
}

namespace {

// Flattened evaluator over a commutator table for the hot exhaustive sweeps.
struct TreeEvaluator {
  const FiniteGroup& g;
  std::vector<Elem> comm_table;  // empty when the group is too large to tabulate
  // post-order program: leaf index or bracket of two stack slots
  struct Node {
    bool leaf;
    int leaf_index;
  };
  std::vector<Node> program;
  int arity;

  TreeEvaluator(const CommutatorTree& tree, const FiniteGroup& group) : g(group) {
    int next_leaf = 0;
    auto rec = [&](auto&& self, const CommutatorTree& t) -> void {
      if (t.is_leaf()) {
        program.push_back({true, next_leaf++});
        return;
      }
      self(self, t.left());
      self(self, t.right());
      program.push_back({false, 0});
    };
    rec(rec, tree);
    arity = next_leaf;
    if (g.order() <= 1024) {
      int n = g.order();
      comm_table.resize(static_cast<std::size_t>(n) * n);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) comm_table[a * n + b] = g.comm(a, b);
    }
  }

  Elem eval(const std::vector<Elem>& leaves) const {
    Elem stack[64] = {};
    int sp = 0;
    int n = g.order();
    for (const auto& node : program) {
      if (node.leaf) {
        stack[sp++] = leaves[node.leaf_index];
      } else {
        Elem b = stack[--sp];
        Elem a = stack[--sp];
        stack[sp++] = comm_table.empty() ? g.comm(a, b) : comm_table[a * n + b];
      }
    }
    return stack[0];
  }
};

std::string tuple_str(const FiniteGroup& g, const std::vector<Elem>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << g.label(t[i]);
  }
  os << ')';
  return os.str();
}

}  // namespace

Subgroup wI_subgroup(const CommutatorTree& tree, const ISelection& sel,
                     const FiniteGroup& g, const EnumBudget& budget) {
  if (!is_multilinear_commutator(tree))
    fail(ErrorKind::domain, "wI_subgroup requires a multilinear commutator tree");
  int r = static_cast<int>(tree.leaves().size());
  if (sel.arity() != r || static_cast<int>(sel.families.size()) != r)
    fail(ErrorKind::domain, "wI_subgroup: selection arity mismatch");
  std::vector<int> radii;
  for (const auto& f : sel.families) {
    if (f.empty()) fail(ErrorKind::domain, "wI_subgroup: empty family");
    radii.push_back(static_cast<int>(f.size()));
  }
  budget_check(radii, budget, "wI_subgroup");
  TreeEvaluator ev(tree, g);
  std::set<Elem> values;
  std::vector<Elem> leaves(r);
  for_each_tuple(radii, [&](const std::vector<int>& idx) {
    for (int i = 0; i < r; ++i) leaves[i] = sel.families[i][idx[i]];
    values.insert(ev.eval(leaves));
  });
  return subgroup_closure(g, {values.begin(), values.end()});
}

CorCheckResult check_cor_uno(const CommutatorTree& tree, const FiniteGroup& g,
                             const Subgroup& h, const std::vector<Elem>& g_tuple,
                             const EnumBudget& budget) {
  if (!is_multilinear_commutator(tree))
    fail(ErrorKind::domain, "check_cor_uno requires a multilinear commutator tree");
  if (!is_normal(h)) fail(ErrorKind::domain, "check_cor_uno: H must be normal");
  int r = static_cast<int>(tree.leaves().size());
  if (static_cast<int>(g_tuple.size()) != r)
    fail(ErrorKind::domain, "check_cor_uno: tuple arity mismatch");

  TreeEvaluator ev(tree, g);
  std::vector<int> radii(r, h.order());
  budget_check(radii, budget, "check_cor_uno");

  Elem base = ev.eval(g_tuple);
  std::vector<Elem> leaves(r);
  CorCheckResult out{CheckStatus::conclusion_true, ""};
  bool hypothesis_ok = true;
  for_each_tuple(radii, [&](const std::vector<int>& idx) {
    if (!hypothesis_ok) return;
    for (int i = 0; i < r; ++i) leaves[i] = g.mul(g_tuple[i], h.elements[idx[i]]);
    if (ev.eval(leaves) != base) {
      hypothesis_ok = false;
      out = {CheckStatus::hypothesis_failed,
             "value changes at h = " + tuple_str(g, leaves)};
    }
  });
  if (!hypothesis_ok) return out;

  for (unsigned mask = 0; mask + 1 < (1u << r); ++mask) {  // proper subsets only
    bool bad = false;
    for_each_tuple(radii, [&](const std::vector<int>& idx) {
      if (bad) return;
      for (int i = 0; i < r; ++i) {
        Elem u = h.elements[idx[i]];
        if (mask & (1u << i)) u = g.mul(g_tuple[i], u);
        leaves[i] = u;
      }
      if (ev.eval(leaves) != FiniteGroup::identity) bad = true;
    });
    if (bad)
      return {CheckStatus::conclusion_false,
              "w_I value nontrivial for I mask " + std::to_string(mask)};
  }
  return out;
}

namespace {

// All values of the tree with J-positions over G and the rest over H are 1.
bool wJ_vanishes(const TreeEvaluator& ev, const FiniteGroup& g, const Subgroup& h,
                 unsigned j_mask, int r, const EnumBudget& budget) {
  std::vector<const std::vector<Elem>*> pools(r);
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> radii(r);
  for (int i = 0; i < r; ++i) {
    pools[i] = (j_mask & (1u << i)) ? &all : &h.elements;
    radii[i] = static_cast<int>(pools[i]->size());
  }
  budget_check(radii, budget, "w_J sweep");
  bool ok = true;
  std::vector<Elem> leaves(r);
  for_each_tuple(radii, [&](const std::vector<int>& idx) {
    if (!ok) return;
    for (int i = 0; i < r; ++i) leaves[i] = (*pools[i])[idx[i]];
    if (ev.eval(leaves) != FiniteGroup::identity) ok = false;
  });
  return ok;
}

}  // namespace

CorCheckResult check_cor_M(const CommutatorTree& tree, const FiniteGroup& g,
                           const Subgroup& h, const std::vector<bool>& in_I,
                           const EnumBudget& budget) {
  if (!is_multilinear_commutator(tree))
    fail(ErrorKind::domain, "check_cor_M requires a multilinear commutator tree");
  if (!is_normal(h)) fail(ErrorKind::domain, "check_cor_M: H must be normal");
  int r = static_cast<int>(tree.leaves().size());
  if (static_cast<int>(in_I.size()) != r)
    fail(ErrorKind::domain, "check_cor_M: selection arity mismatch");

  TreeEvaluator ev(tree, g);
  unsigned i_mask = 0;
  for (int i = 0; i < r; ++i)
    if (in_I[i]) i_mask |= 1u << i;

  for (unsigned j = 0; j < (1u << r); ++j) {
    if ((j & i_mask) != j || j == i_mask) continue;  // J strictly inside I
    if (!wJ_vanishes(ev, g, h, j, r, budget))
      return {CheckStatus::hypothesis_failed,
              "w_J(G;H) nontrivial for J mask " + std::to_string(j)};
  }

  // Pointwise conclusion.  It suffices to let the I-positions range over coset
  // representatives of H: if the identity holds at a representative tuple for
  // every h in H^r, replacing g_i by g_i*u_i (u_i in H) follows by applying it
  // twice, once with h_i and once with u_i*h_i in the I-slots.
  std::vector<Elem> coset_reps;
  {
    std::vector<bool> seen(g.order(), false);
    for (Elem x = 0; x < g.order(); ++x) {
      if (seen[x]) continue;
      coset_reps.push_back(x);
      for (Elem hh : h.elements) seen[g.mul(x, hh)] = true;
    }
  }

  std::vector<const std::vector<Elem>*> gpools(r);
  std::vector<int> radii(r);
  static const std::vector<Elem> unit{FiniteGroup::identity};
  for (int i = 0; i < r; ++i) {
    gpools[i] = in_I[i] ? &coset_reps : &unit;
    radii[i] = static_cast<int>(gpools[i]->size());
  }
  std::vector<int> hradii(r, h.order());
  {
    auto combined = radii;
    combined.insert(combined.end(), hradii.begin(), hradii.end());
    budget_check(combined, budget, "check_cor_M");
  }

  CorCheckResult out{CheckStatus::conclusion_true, ""};
  std::vector<Elem> gt(r), lhs(r), rhs(r);
  bool done = false;
  for_each_tuple(radii, [&](const std::vector<int>& gidx) {
    if (done) return;
    for (int i = 0; i < r; ++i) gt[i] = (*gpools[i])[gidx[i]];
    for_each_tuple(hradii, [&](const std::vector<int>& hidx) {
      if (done) return;
      for (int i = 0; i < r; ++i) {
        Elem hi = h.elements[hidx[i]];
        if (in_I[i]) {
          lhs[i] = g.mul(gt[i], hi);
          rhs[i] = gt[i];
        } else {
          lhs[i] = hi;
          rhs[i] = hi;
        }
      }
      if (ev.eval(lhs) != ev.eval(rhs)) {
        out = {CheckStatus::conclusion_false,
               "mismatch at g = " + tuple_str(g, gt) + ", h-shifted " + tuple_str(g, lhs)};
        done = true;
      }
    });
  });
  return out;
}

bool vanishing_predicate(const CommutatorTree& tree, const FiniteGroup& g,
                         const std::vector<bool>& in_I, const Subgroup& v,
                         const EnumBudget& budget) {
  int r = static_cast<int>(tree.leaves().size());
  if (static_cast<int>(in_I.size()) != r)
    fail(ErrorKind::domain, "vanishing_predicate: selection arity mismatch");
  TreeEvaluator ev(tree, g);
  unsigned i_mask = 0;
  for (int i = 0; i < r; ++i)
    if (in_I[i]) i_mask |= 1u << i;
  for (unsigned j = 0; j < (1u << r); ++j) {
    if ((j & i_mask) != j || j == i_mask) continue;
    if (!wJ_vanishes(ev, g, v, j, r, budget)) return false;
  }
  return true;
}

std::optional<Subgroup> find_vanishing_subgroup(const CommutatorTree& tree,
                                                const FiniteGroup& g,
                                                const std::vector<bool>& in_I,
                                                const EnumBudget& budget) {
  auto normals = all_normal_subgroups(g);
  std::sort(normals.begin(), normals.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::pair(-a.order(), a.elements) < std::pair(-b.order(), b.elements);
  });
  for (const auto& v : normals) {
    if (vanishing_predicate(tree, g, in_I, v, budget)) {
      if (v.order() == 1) return std::nullopt;  // only the trivial subgroup works
      return v;
    }
  }
  return std::nullopt;  // unreachable: the trivial subgroup always qualifies
}

int word_width(const Word& w, const FiniteGroup& g, const EnumBudget& budget) {
  auto values = value_set(w, g, {}, budget);
  Subgroup verbal = subgroup_closure(g, values);
  if (verbal.order() == 1) return 0;
  std::set<Elem> gens(values.begin(), values.end());
  for (Elem v : values) gens.insert(g.inv(v));

  std::set<Elem> ball{FiniteGroup::identity};
  int m = 0;
  while (static_cast<int>(ball.size()) < verbal.order()) {
    std::set<Elem> next;
    for (Elem x : ball)
      for (Elem s : gens) next.insert(g.mul(x, s));
    ++m;
    check(next.size() > ball.size(), "word_width: ball growth stalled");
    ball = std::move(next);
  }
  return m;
}

bool is_weakly_rational_on(const Word& w, const FiniteGroup& g,
                           const EnumBudget& budget) {
  auto values = value_set(w, g, {}, budget);
  std::set<Elem> vs(values.begin(), values.end());
  long long exp = exponent(g);
  for (long long e = 1; e <= exp; ++e) {
    if (std::gcd(e, static_cast<long long>(g.order())) != 1) continue;
    for (Elem v : values)
      if (!vs.count(g.power(v, e))) return false;
  }
  return true;
}

bool power_map_is_endomorphism(const FiniteGroup& g, long long m) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (g.power(g.mul(a, b), m) != g.mul(g.power(a, m), g.power(b, m))) return false;
  return true;
}

ConcisenessReport conciseness_report(const Word& w, const FiniteGroup& g,
                                     const EnumBudget& budget) {
  ConcisenessReport r;
  auto values = value_set(w, g, {}, budget);
  r.value_count = static_cast<int>(values.size());
  Subgroup verbal = subgroup_closure(g, values);
  r.verbal_order = verbal.order();
  r.width = word_width(w, g, budget);
  r.weakly_rational_on_G = is_weakly_rational_on(w, g, budget);
  return r;
}

}  // namespace verbal
