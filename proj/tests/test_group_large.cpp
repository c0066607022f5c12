#include <doctest.h>

#include <random>
#include <set>

#include "verbal/group.hpp"
#include "verbal/word_values.hpp"

using namespace verbal;

// Groups above the tabulation threshold run on on-the-fly representations;
// these checks exercise that path.

TEST_CASE("large unitriangular group stays consistent") {
  FiniteGroup g = make_unitriangular(5, 3);  // order 3^10, no Cayley table
  CHECK(g.order() == 59049);
  std::mt19937 rng(17);
  std::uniform_int_distribution<Elem> pick(0, g.order() - 1);
  for (int i = 0; i < 2000; ++i) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    CHECK(g.mul(a, g.inv(a)) == FiniteGroup::identity);
    CHECK(g.power(a, 3) == g.mul(a, g.mul(a, a)));
  }
  // p-group of exponent dividing p^2 here: x^9 = 1 for sampled elements
  for (int i = 0; i < 200; ++i) CHECK(g.power(pick(rng), 9) == FiniteGroup::identity);
}

TEST_CASE("large wreath product stays consistent") {
  FiniteGroup g = make_wreath_cyclic(2, 12);  // order 2^12 * 12
  CHECK(g.order() == 49152);
  std::mt19937 rng(23);
  std::uniform_int_distribution<Elem> pick(0, g.order() - 1);
  for (int i = 0; i < 2000; ++i) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    CHECK(g.mul(g.inv(a), a) == FiniteGroup::identity);
  }
}

TEST_CASE("large direct product stays consistent") {
  FiniteGroup g = make_direct_product(make_symmetric(5), make_cyclic(100));
  CHECK(g.order() == 12000);
  std::mt19937 rng(29);
  std::uniform_int_distribution<Elem> pick(0, g.order() - 1);
  for (int i = 0; i < 2000; ++i) {
    Elem a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    CHECK(g.mul(a, g.inv(a)) == FiniteGroup::identity);
  }
}

TEST_CASE("conjugacy pruning agrees with a brute-force sweep") {
  FiniteGroup s4 = make_symmetric(4);
  for (const char* ws : {"x^2", "[x,y]", "x^3*y^2"}) {
    Word w = parse_word(ws, {"x", "y"});
    auto pruned = value_set(w, s4);
    std::set<Elem> brute;
    for (Elem x = 0; x < s4.order(); ++x)
      for (Elem y = 0; y < s4.order(); ++y)
        brute.insert(evaluate(w, s4, Assignment{{x, y}, {}}));
    CHECK(pruned == std::vector<Elem>(brute.begin(), brute.end()));
  }
}
