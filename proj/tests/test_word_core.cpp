#include <doctest.h>

#include <random>

#include "verbal/word.hpp"

using namespace verbal;

namespace {

Word rand_word(std::mt19937& rng, const std::vector<std::string>& ab, int len) {
  std::uniform_int_distribution<int> var(0, static_cast<int>(ab.size()) - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  FreeWord<std::string> w;
  for (int i = 0; i < len; ++i) {
    int e = exp(rng);
    if (e == 0) e = 1;
    w.push(ab[var(rng)], e);
  }
  return Word(std::move(w), ab);
}

}  // namespace

TEST_CASE("free reduction") {
  std::vector<std::string> ab{"x", "y"};
  CHECK(parse_word("x^0", ab).empty());
  CHECK(parse_word("x^2*x^-2", ab).empty());
  CHECK(parse_word("x*y*y^-1*x^-1", ab).empty());
  CHECK(parse_word("x*x", ab) == parse_word("x^2", ab));
  // cascading cancellation across merged letters
  CHECK(parse_word("x*y^2*y^-1*y^-1*x", ab) == parse_word("x^2", ab));
}

TEST_CASE("bracket grammar is left-normed") {
  std::vector<std::string> ab{"x", "y", "z"};
  Word w = parse_word("[x,y,z]", ab);
  Word x = parse_word("x", ab), y = parse_word("y", ab), z = parse_word("z", ab);
  CHECK(w == commutator(commutator(x, y), z));
  CHECK(parse_word("[[x,y],z]", ab) == w);
  CHECK(parse_word("[x,y]", ab) == commutator(x, y));
  // explicit nesting for non-left-normed shapes
  Word d2 = parse_word("[[x,y],[z,x]]", ab);
  CHECK(d2 == commutator(commutator(x, y), commutator(z, x)));
}

TEST_CASE("parser errors carry positions") {
  std::vector<std::string> ab{"x"};
  CHECK_THROWS_WITH_AS(parse_word("x^2*w", ab),
                       doctest::Contains("unknown variable 'w'"), Error);
  CHECK_THROWS_AS(parse_word("[x]", ab), Error);
  CHECK_THROWS_AS(parse_word("(x", ab), Error);
  CHECK_THROWS_AS(parse_word("x^", ab), Error);
}

TEST_CASE("longest-match lexing splits juxtaposed variables") {
  Word w = parse_word("x1x2", {"x1", "x2"});
  CHECK(w.body().letters().size() == 2);
  Word joined = parse_word("x1x2", {"x1x2", "x1", "x2"});
  CHECK(joined.body().letters().size() == 1);
}

TEST_CASE("serialize round trip") {
  std::mt19937 rng(7);
  std::vector<std::string> ab{"x", "y", "z"};
  for (int i = 0; i < 200; ++i) {
    Word w = rand_word(rng, ab, 8);
    CHECK(parse_word(w.str(), ab) == w);
  }
  CHECK(parse_word("1", ab).empty());
  CHECK(Word().str() == "1");
}

TEST_CASE("gamma words") {
  CHECK_THROWS_AS(gamma_word(0), Error);
  CHECK(gamma_word(1) == CommutatorTree::leaf("x1"));
  CHECK(gamma_word(2) == CommutatorTree::bracket(CommutatorTree::leaf("x1"),
                                                 CommutatorTree::leaf("x2")));
  auto g3 = gamma_word(3);
  CHECK(g3.str() == "[[x1,x2],x3]");
  CHECK(is_multilinear_commutator(g3));
  for (int k = 1; k <= 5; ++k) CHECK(is_multilinear_commutator(gamma_word(k)));
}

TEST_CASE("delta words") {
  CHECK(delta_word(0) == CommutatorTree::leaf("x1"));
  CHECK(delta_word(1).str() == "[x1,x2]");
  CHECK(delta_word(2).str() == "[[x1,x2],[x3,x4]]");
  for (int k = 0; k <= 3; ++k) {
    CHECK(is_multilinear_commutator(delta_word(k)));
    CHECK(delta_word(k).leaves().size() == (std::size_t{1} << k));
  }
}

TEST_CASE("abelianization of repeated and derived words vanishes") {
  for (int k = 2; k <= 5; ++k) {
    auto exps = gamma_word(k).expand().exponent_vector();
    for (auto e : exps) CHECK(e == 0);
  }
  for (int k = 1; k <= 3; ++k) {
    auto exps = delta_word(k).expand().exponent_vector();
    for (auto e : exps) CHECK(e == 0);
  }
}

TEST_CASE("engel words") {
  CHECK(engel_word(1) == parse_word("[x,y]", {"x", "y"}));
  CHECK(engel_word(2) == parse_word("[x,y,y]", {"x", "y"}));
  CHECK(engel_word(3) == parse_word("[x,y,y,y]", {"x", "y"}));
  CHECK_THROWS_AS(engel_word(0), Error);
}

TEST_CASE("multilinearity detection") {
  // [[x1,x2],[x3,x4,x5],x6], left-normed at the top
  auto t = CommutatorTree::bracket(
      CommutatorTree::bracket(
          CommutatorTree::bracket(CommutatorTree::leaf("x1"), CommutatorTree::leaf("x2")),
          CommutatorTree::bracket(
              CommutatorTree::bracket(CommutatorTree::leaf("x3"),
                                      CommutatorTree::leaf("x4")),
              CommutatorTree::leaf("x5"))),
      CommutatorTree::leaf("x6"));
  CHECK(is_multilinear_commutator(t));

  // 3-Engel tree [x,y,y,y] repeats y
  auto engel = CommutatorTree::bracket(
      CommutatorTree::bracket(
          CommutatorTree::bracket(CommutatorTree::leaf("x"), CommutatorTree::leaf("y")),
          CommutatorTree::leaf("y")),
      CommutatorTree::leaf("y"));
  CHECK_FALSE(is_multilinear_commutator(engel));

  CHECK(is_multilinear_commutator(CommutatorTree::leaf("x1")));
}

TEST_CASE("tree JSON round trip") {
  auto t = delta_word(2);
  CHECK(CommutatorTree::from_json(t.to_json()) == t);
  auto leaf = CommutatorTree::leaf("x1");
  CHECK(leaf.to_json() == "{\"v\":\"x1\"}");
  CHECK(CommutatorTree::from_json(leaf.to_json()) == leaf);
  CHECK_THROWS_AS(CommutatorTree::from_json("{\"c\":[{\"v\":\"x\"}]}"), Error);
}

TEST_CASE("abelian split") {
  std::vector<std::string> ab{"x", "y"};
  SUBCASE("power word") {
    auto s = abelian_split(parse_word("x^2", {"x"}));
    CHECK(s.exponents.at("x") == 2);
    CHECK(s.gcd_m == 2);
    CHECK(s.commutator_part.empty());
  }
  SUBCASE("commutator word") {
    Word w = parse_word("[x,y]", ab);
    auto s = abelian_split(w);
    CHECK(s.exponents.at("x") == 0);
    CHECK(s.exponents.at("y") == 0);
    CHECK(s.gcd_m == 0);
    CHECK(s.commutator_part == w);
  }
  SUBCASE("mixed word: gcd(4,6) = 2") {
    Word w = parse_word("x^4*y^6*[x,y]", ab);
    auto s = abelian_split(w);
    CHECK(s.gcd_m == 2);
    // the commutator part abelianises to zero
    for (auto e : s.commutator_part.exponent_vector()) CHECK(e == 0);
  }
  SUBCASE("reassembly is free equality") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
      Word w = rand_word(rng, ab, 6);
      auto s = abelian_split(w);
      FreeWord<std::string> u;
      for (const auto& v : w.alphabet()) u.push(v, s.exponents.at(v));
      CHECK(Word(u, ab) * s.commutator_part == w);
    }
  }
}

TEST_CASE("tilde_v words") {
  CHECK(tilde_v_word(0).empty());
  CHECK(tilde_v_word(1).empty());  // (x1 x2)^-1 x1 x2 reduces freely
  Word v2 = tilde_v_word(2);
  CHECK(v2 == parse_word("(x1*x2)^-2*x1^2*x2^2", {"x1", "x2"}));
  for (auto e : v2.exponent_vector()) CHECK(e == 0);
  CHECK_THROWS_AS(tilde_v_word(-1), Error);
}
