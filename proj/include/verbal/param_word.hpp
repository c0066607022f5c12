#ifndef VERBAL_PARAM_WORD_HPP
#define VERBAL_PARAM_WORD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verbal/free_word.hpp"
#include "verbal/group.hpp"
#include "verbal/hall.hpp"

namespace verbal {

// Free generator of the parametrised-word group: a parameter variable xi{h}
// bound to a group element at substitution time, or a free variable eta{q,i}
// standing for the q-th coordinate (the copy index i only distinguishes
// formal occurrences).
struct ParamSymbol {
  enum class Kind { xi, eta };
  Kind kind;
  std::string handle;  // xi only
  int q = 0;           // eta: coordinate, 1-based
  int copy = 0;        // eta: copy index, 1-based

  static ParamSymbol xi(std::string h) {
    return ParamSymbol{Kind::xi, std::move(h), 0, 0};
  }
  static ParamSymbol eta(int q, int copy) {
    return ParamSymbol{Kind::eta, {}, q, copy};
  }
  bool is_eta() const { return kind == Kind::eta; }

  std::string str() const;

  friend auto operator<=>(const ParamSymbol&, const ParamSymbol&) = default;
};

// Reduced word over ParamSymbols with a declared valence r; eta coordinates
// must satisfy 1 <= q <= r.
class ParamWord {
 public:
  ParamWord() = default;
  ParamWord(FreeWord<ParamSymbol> body, int valence);

  const FreeWord<ParamSymbol>& body() const { return body_; }
  int valence() const { return valence_; }
  bool empty() const { return body_.empty(); }

  ParamWord operator*(const ParamWord& o) const;
  ParamWord inverse() const { return ParamWord(body_.inverse(), valence_); }

  // Number of distinct eta generators in the reduced form.
  int degree() const;

  std::vector<ParamSymbol> symbols() const;  // distinct, sorted

  std::string str() const;

  friend bool operator==(const ParamWord&, const ParamWord&) = default;

 private:
  FreeWord<ParamSymbol> body_;
  int valence_ = 0;
};

// xi{name}, eta{q,i}, products, powers, '(...)' and left-normed brackets.
ParamWord parse_param_word(const std::string& text, int valence);

// Deletes all eta letters; a homomorphism onto the parameter-only part.
// The resulting word is trivial modulo gamma_{c+1} exactly when the word map
// sends the identity tuple to 1 in every group of class at most c.
ParamWord eta_deleted(const ParamWord& w);

// Left-normed commutator [entries...] in xi/eta generators, each eta at most
// once; the elementary building block of E-products.
struct ElemCommutator {
  std::vector<ParamSymbol> entries;
  int valence = 0;

  int weight() const { return static_cast<int>(entries.size()); }
  int degree() const;  // distinct etas among the entries
  ParamWord expand() const;
  std::string str() const;

  friend bool operator==(const ElemCommutator&, const ElemCommutator&) = default;
};

ElemCommutator make_elem_commutator(std::vector<ParamSymbol> entries, int valence);

// Ordered formal product of elementary commutators.
struct EProduct {
  std::vector<ElemCommutator> factors;
  int valence = 0;

  bool empty() const { return factors.empty(); }
  ParamWord product() const;  // multiplies the factors out in order
};

// (c+1-k, deg) under lexicographic order; the minimum over an empty product
// is the least element (0,0).
struct LengthValue {
  int co_k = 0;
  int deg = 0;
  friend auto operator<=>(const LengthValue&, const LengthValue&) = default;
};

// Maximal j in {1,...,c+1} with the element in gamma_j(Omega).
int k_of(const ElemCommutator& e, int c);
LengthValue length_of(const ElemCommutator& e, int c);

using ParamEnv = std::map<std::string, Elem>;

Elem substitute(const ParamWord& w, const FiniteGroup& g, const ParamEnv& env,
                const std::vector<Elem>& coords);
Elem substitute(const EProduct& ep, const FiniteGroup& g, const ParamEnv& env,
                const std::vector<Elem>& coords);

// Writes omega (in gamma_k, with identically-1 value at the identity tuple)
// as an E-product of elementary commutators, each in gamma_k and of degree
// at least 1, evaluation-equal to omega in every group of class at most c.
// Exponent peeling runs level by level on the Magnus expansion; repeated eta
// entries inside one factor are renamed to fresh copy indices, which leaves
// all word maps unchanged.
EProduct eproduct_decompose(const ParamWord& omega, int k, int c);

struct ShiftExpansion {
  EProduct shifted;  // per factor: the 2^deg - 2 partial substitutions
  ParamWord nu;      // exact remainder, certified to lie in gamma_{k+1}
};

// Realises  prod e_t(bg) = prod e_t(b) * prod e_t(g) * prod shifted(b||g) * nu(g)
// as an exact identity in Omega: the shifted factors replace nonempty proper
// subsets of each factor's etas by the matching xi{b_q}, in ascending
// bit-mask order, and nu is defined as the discrepancy and then certified to
// lie one level deeper and to vanish at the identity tuple.
ShiftExpansion shift_expand(const EProduct& ep,
                            const std::vector<std::string>& b_handles, int c);

struct FriendlyCertificate {
  int k = 0;
  std::vector<LengthValue> source_lengths;
  std::vector<LengthValue> nu_lengths;
  LengthValue max_source;  // least element when the product is empty
  LengthValue max_nu;
  bool source_empty = true;
  bool strict_descent = false;  // max_nu < max_source
  std::string to_json() const;
};

struct FriendlyDecomposition {
  EProduct source;  // E-product representing omega
  EProduct nu_b;    // shifted factors followed by the re-decomposed remainder
  FriendlyCertificate certificate;
};

// The recursive step behind friendly products: decomposes omega, shift-expands
// against the handle tuple b, re-decomposes the remainder one level deeper and
// certifies strict length descent (unless the source is already empty).
FriendlyDecomposition friendly_decompose(const ParamWord& omega, int c,
                                         const std::vector<std::string>& b_handles);

struct F2CheckResult {
  bool ok = true;
  std::string witness;
};

struct SampleSpec {
  // nullopt: all tuples; otherwise (count, seed)
  std::optional<std::pair<int, std::uint64_t>> sample;
};

// Checks omega(bg) = omega(b) * omega(g) * nu_b(g) over g-tuples, with the
// b-tuple read from env via b_handles.
F2CheckResult verify_F2(const ParamWord& omega, const EProduct& nu_b,
                        const std::vector<std::string>& b_handles,
                        const FiniteGroup& g, const ParamEnv& env,
                        const SampleSpec& sample = {});

}  // namespace verbal

#endif
