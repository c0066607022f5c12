#include <doctest.h>

#include <random>

#include "verbal/group.hpp"
#include "verbal/hall.hpp"

using namespace verbal;

namespace {

Elem eval_coded(const FreeWord<int>& w, const FiniteGroup& g,
                const std::vector<Elem>& vals) {
  Elem acc = FiniteGroup::identity;
  for (const auto& l : w.letters()) acc = g.mul(acc, g.power(vals[l.sym], l.exp));
  return acc;
}

Elem eval_nf(const HallNormalForm& nf, const FiniteGroup& g,
             const std::vector<Elem>& vals) {
  Elem acc = FiniteGroup::identity;
  for (std::size_t i = 0; i < nf.exponents.size(); ++i) {
    if (nf.exponents[i] == 0) continue;
    Elem b = eval_coded(nf.basis->expand(static_cast<int>(i)), g, vals);
    acc = g.mul(acc, g.power(b, nf.exponents[i]));
  }
  return acc;
}

// Exhaustively compares a word with its normal form in UT(c+1, p).
void check_collect_exhaustive(const FreeWord<int>& w, int m, int c, long long p) {
  HallNormalForm nf = collect(w, m, c);
  FiniteGroup g = make_unitriangular(c + 1, p);
  std::vector<Elem> vals(m, 0);
  for (;;) {
    CHECK(eval_coded(w, g, vals) == eval_nf(nf, g, vals));
    int pos = m - 1;
    while (pos >= 0) {
      if (++vals[pos] < g.order()) break;
      vals[pos] = 0;
      --pos;
    }
    if (pos < 0) return;
  }
}

FreeWord<int> rand_coded(std::mt19937& rng, int m, int len) {
  std::uniform_int_distribution<int> var(0, m - 1);
  std::uniform_int_distribution<int> exp(-2, 2);
  FreeWord<int> w;
  for (int i = 0; i < len; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    w.push(var(rng), e);
  }
  return w;
}

}  // namespace

TEST_CASE("hall basis shapes") {
  std::vector<std::string> ab{"a", "b"};
  HallBasis h2 = hall_basis(ab, 2);
  REQUIRE(h2.size() == 3);
  CHECK(h2.str(0, ab) == "a");
  CHECK(h2.str(1, ab) == "b");
  CHECK(h2.str(2, ab) == "[b,a]");

  HallBasis h1 = hall_basis({"a"}, 5);
  CHECK(h1.size() == 1);

  HallBasis h3 = hall_basis(ab, 3);
  REQUIRE(h3.size() == 5);
  CHECK(h3.str(3, ab) == "[b,a,a]");
  CHECK(h3.str(4, ab) == "[b,a,b]");

  // Witt dimensions over three symbols: 3, 3, 8
  HallBasis w3(3, 3);
  CHECK(w3.indices_of_weight(1).size() == 3);
  CHECK(w3.indices_of_weight(2).size() == 3);
  CHECK(w3.indices_of_weight(3).size() == 8);
}

TEST_CASE("collect basics") {
  SUBCASE("single generator") {
    auto nf = collect(FreeWord<int>::generator(0), 2, 3);
    CHECK(nf.exponents[0] == 1);
    CHECK(nf.exponents[1] == 0);
    for (std::size_t i = 2; i < nf.exponents.size(); ++i) CHECK(nf.exponents[i] == 0);
  }
  SUBCASE("a b a^-1 b^-1 lands on [b,a]^-1") {
    FreeWord<int> w;
    w.push(0, 1);
    w.push(1, 1);
    w.push(0, -1);
    w.push(1, -1);
    auto nf = collect(w, 2, 2);
    CHECK(nf.exponents == std::vector<long long>{0, 0, -1});
    for (long long p : {2, 3, 5}) check_collect_exhaustive(w, 2, 2, p);
  }
  SUBCASE("word on a declared alphabet") {
    Word w = parse_word("[a*b,z]", {"a", "b", "z"});
    Word rhs = parse_word("[a,z]*[b,z]*[a,z,b]", {"a", "b", "z"});
    CHECK(collect(w, 3) == collect(rhs, 3));
    // evaluation oracle, exhaustive at p = 2: ids a=0, b=1, z=2
    FreeWord<int> ab;
    ab.push(0, 1);
    ab.push(1, 1);
    FreeWord<int> coded = FreeWord<int>::commutator(ab, FreeWord<int>::generator(2));
    check_collect_exhaustive(coded, 3, 3, 2);
  }
}

TEST_CASE("collect agrees with evaluation on random words") {
  std::mt19937 rng(2024);
  for (int c : {2, 3}) {
    for (int i = 0; i < 10; ++i) {
      FreeWord<int> w = rand_coded(rng, 2, 8);
      for (long long p : {2, 3}) check_collect_exhaustive(w, 2, c, p);
    }
  }
  // three-letter words, sampled assignments
  FiniteGroup g = make_unitriangular(4, 3);
  std::uniform_int_distribution<Elem> pick(0, g.order() - 1);
  for (int i = 0; i < 5; ++i) {
    FreeWord<int> w = rand_coded(rng, 3, 8);
    HallNormalForm nf = collect(w, 3, 3);
    for (int s = 0; s < 2000; ++s) {
      std::vector<Elem> vals{pick(rng), pick(rng), pick(rng)};
      CHECK(eval_coded(w, g, vals) == eval_nf(nf, g, vals));
    }
  }
}

TEST_CASE("normal form uniqueness as congruence oracle") {
  // [a^2, b] and [a,b]^2 agree in every class-2 group but not freely
  Word lhs = parse_word("[a^2,b]", {"a", "b"});
  Word rhs = parse_word("[a,b]^2", {"a", "b"});
  Word diff = rhs.inverse() * lhs;
  CHECK_FALSE(diff.empty());
  CHECK(collect(diff, 2).trivial());
  CHECK(collect(lhs, 2) == collect(rhs, 2));
  CHECK_FALSE(collect(lhs, 3) == collect(rhs, 3));  // split one class higher
}

TEST_CASE("filtration level") {
  FreeWord<int> g2 = FreeWord<int>::commutator(FreeWord<int>::generator(0),
                                               FreeWord<int>::generator(1));
  CHECK(filtration_level(g2, 4) == 2);
  FreeWord<int> g3 = FreeWord<int>::commutator(g2, FreeWord<int>::generator(2));
  CHECK(filtration_level(g3, 4) == 3);
  CHECK(filtration_level(FreeWord<int>::generator(0), 4) == 1);
  CHECK(filtration_level(FreeWord<int>{}, 4) == 4);
}

TEST_CASE("inverse commutator swap") {
  CHECK(inverse_commutator_swap({0, 1}) == std::vector<int>{1, 0});
  CHECK(inverse_commutator_swap(inverse_commutator_swap({0, 1, 2})) ==
        std::vector<int>{0, 1, 2});
  CHECK(check_inverse_swap_congruence({0, 1}));
  CHECK(check_inverse_swap_congruence({0, 1, 2}));
  CHECK(check_inverse_swap_congruence({0, 1, 0, 1}));

  // evaluation oracle: in a class-3 group the swapped weight-3 commutator
  // equals the inverse on the nose
  FiniteGroup g = make_unitriangular(4, 2);
  FreeWord<int> orig = left_normed_word({0, 1, 2});
  FreeWord<int> swapped = left_normed_word(inverse_commutator_swap({0, 1, 2}));
  for (Elem a = 0; a < g.order(); a += 7)
    for (Elem b = 0; b < g.order(); b += 5)
      for (Elem c = 0; c < g.order(); c += 3) {
        std::vector<Elem> vals{a, b, c};
        CHECK(g.inv(eval_coded(orig, g, vals)) == eval_coded(swapped, g, vals));
      }
  CHECK_THROWS_AS(inverse_commutator_swap({0}), Error);
}

TEST_CASE("hall basis budget") {
  CHECK_THROWS_AS(HallBasis(4, 9, 100), Error);
}
