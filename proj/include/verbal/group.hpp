#ifndef VERBAL_GROUP_HPP
#define VERBAL_GROUP_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "verbal/error.hpp"

namespace verbal {

using Elem = int;

namespace detail {

struct GroupRep {
  int order = 0;
  std::string name;
  virtual Elem mul(Elem, Elem) const = 0;
  virtual Elem inv(Elem) const = 0;
  virtual std::string label(Elem) const = 0;
  virtual ~GroupRep() = default;
};

}  // namespace detail

// A finite group on element ids 0..order-1 with identity 0.  Dense Cayley
// table below the tabulation threshold, on-the-fly multiplication above it.
// Immutable after construction; cheap to copy and share.
class FiniteGroup {
 public:
  static constexpr Elem identity = 0;
  static constexpr int table_threshold = 4096;
  static constexpr long long order_cap = 100000;

  FiniteGroup() = default;

  int order() const { return rep_->order; }
  const std::string& name() const { return rep_->name; }
  Elem mul(Elem a, Elem b) const { return rep_->mul(a, b); }
  Elem inv(Elem a) const { return rep_->inv(a); }
  std::string label(Elem a) const { return rep_->label(a); }

  Elem power(Elem a, long long n) const;
  Elem conjugate(Elem a, Elem g) const { return mul(mul(inv(g), a), g); }
  Elem comm(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int element_order(Elem a) const;

  std::optional<Elem> element_by_label(const std::string& label) const;

  // Multiset of element orders; a cheap isomorphism-invariant fingerprint.
  std::map<int, int> order_profile() const;

  bool same_rep(const FiniteGroup& o) const { return rep_ == o.rep_; }

  // Wraps a representation, tabulating small groups, and validates the group
  // axioms (exhaustively up to order 256, by seeded sampling above).
  static FiniteGroup adopt(std::shared_ptr<detail::GroupRep> rep, bool validate = true);

 private:
  std::shared_ptr<const detail::GroupRep> rep_;
};

// --- catalog constructors ---------------------------------------------------

FiniteGroup make_cyclic(int n);
FiniteGroup make_dihedral(int n);       // order 2n, symmetries of the n-gon
FiniteGroup make_symmetric(int n);      // n <= 6
FiniteGroup make_quaternion8();
FiniteGroup make_heisenberg(long long p);          // = UT(3,p)
FiniteGroup make_unitriangular(int n, long long p);  // n <= 5, order capped
enum class ExtraspecialKind { exponent_p, exponent_p_squared };
FiniteGroup make_extraspecial(long long p, ExtraspecialKind kind);
FiniteGroup make_burnside_2_3();        // exponent-3 group of order 27
FiniteGroup make_wreath_cyclic(long long p, int n);  // C_p wr C_n
FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Cayley-table JSON: {"order": n, "mul": [[...]], "labels": [...]}.
FiniteGroup group_from_cayley_json(const std::string& text, const std::string& name);
std::string group_to_cayley_json(const FiniteGroup& g);

// --- subgroups ---------------------------------------------------------------

// Sorted element-id set closed under multiplication and inverse.
struct Subgroup {
  FiniteGroup parent;
  std::vector<Elem> elements;  // sorted, contains the identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elem x) const;
  bool is_whole_group() const { return order() == parent.order(); }
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements == b.elements;
  }
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<Elem>& generators);
Subgroup normal_closure(const FiniteGroup& g, const std::vector<Elem>& generators);
Subgroup centralizer(const FiniteGroup& g, Elem x);
std::vector<Elem> conjugacy_class(const FiniteGroup& g, Elem x);
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g);
bool is_normal(const Subgroup& s);
std::vector<Subgroup> all_normal_subgroups(const FiniteGroup& g);

// Quotient by a normal subgroup, with the projection map on element ids.
struct QuotientResult {
  FiniteGroup group;
  std::vector<Elem> projection;  // size |G|
};
QuotientResult quotient(const FiniteGroup& g, const Subgroup& n);

struct SeriesReport {
  enum class Kind { lower_central, derived };
  Kind kind;
  std::vector<Subgroup> terms;  // descending, last term is stable
};

SeriesReport lower_central_series(const FiniteGroup& g);
SeriesReport derived_series(const FiniteGroup& g);
std::optional<int> nilpotency_class(const FiniteGroup& g);
long long exponent(const FiniteGroup& g);

// Sylow decomposition of a nilpotent group: prime -> its Sylow subgroup,
// verified to be an internal direct product.
std::map<long long, Subgroup> sylow_decomposition(const FiniteGroup& g);

bool is_prime(long long n);

}  // namespace verbal

#endif
