#include <doctest.h>

#include <random>
#include <set>

#include "verbal/group.hpp"
#include "verbal/param_word.hpp"

using namespace verbal;

namespace {

// Example word [[eta11, eta21, eta22], [eta23, eta31]] of valence 3.
ParamWord example_omega() {
  return parse_param_word("[[eta{1,1},eta{2,1},eta{2,2}],[eta{2,3},eta{3,1}]]", 3);
}

std::vector<std::string> handles(int r) {
  std::vector<std::string> out;
  for (int q = 1; q <= r; ++q) out.push_back("b" + std::to_string(q));
  return out;
}

}  // namespace

TEST_CASE("param word parsing and printing") {
  ParamWord w = parse_param_word("xi{a}*eta{1,1}^-2", 2);
  CHECK(w.str() == "xi{a}*eta{1,1}^-2");
  CHECK(parse_param_word(w.str(), 2) == w);
  CHECK(parse_param_word("1", 1).empty());
  CHECK_THROWS_AS(parse_param_word("eta{3,1}", 2), Error);  // beyond valence
  CHECK_THROWS_AS(parse_param_word("xi{}", 1), Error);
  CHECK_THROWS_AS(parse_param_word("[eta{1,1}]", 1), Error);
}

TEST_CASE("degree counts distinct free variables") {
  CHECK(example_omega().degree() == 5);
  CHECK(parse_param_word("xi{a}*xi{b}^3", 1).degree() == 0);
  CHECK(parse_param_word("eta{1,1}*eta{1,1}^2", 1).degree() == 1);
  // degree drops when letters cancel in the reduced form
  CHECK(parse_param_word("eta{1,1}*eta{2,1}*eta{2,1}^-1*eta{1,1}^-1", 2).degree() == 0);
}

TEST_CASE("degree-0 words induce constant maps") {
  FiniteGroup g = make_symmetric(3);
  ParamWord w = parse_param_word("xi{a}*xi{b}^-1", 2);
  ParamEnv env{{"a", 3}, {"b", 5}};
  Elem first = substitute(w, g, env, {0, 0});
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      CHECK(substitute(w, g, env, {x, y}) == first);
}

TEST_CASE("substitution") {
  FiniteGroup g = make_unitriangular(3, 3);
  SUBCASE("empty word gives the identity") {
    CHECK(substitute(ParamWord(FreeWord<ParamSymbol>{}, 0), g, {}, {}) == 0);
  }
  SUBCASE("a bare parameter returns its binding") {
    ParamWord w = parse_param_word("xi{h}", 0);
    CHECK(substitute(w, g, {{"h", 17}}, {}) == 17);
  }
  SUBCASE("unbound parameter is an error") {
    ParamWord w = parse_param_word("xi{h}", 0);
    CHECK_THROWS_AS(substitute(w, g, {}, {}), Error);
  }
  SUBCASE("the example word models its commutator word") {
    ParamWord w = example_omega();
    std::mt19937 rng(5);
    std::uniform_int_distribution<Elem> pick(0, g.order() - 1);
    for (int i = 0; i < 300; ++i) {
      Elem g1 = pick(rng), g2 = pick(rng), g3 = pick(rng);
      Elem direct = g.comm(g.comm(g.comm(g1, g2), g2), g.comm(g2, g3));
      CHECK(substitute(w, g, {}, {g1, g2, g3}) == direct);
    }
  }
}

TEST_CASE("length function data") {
  SUBCASE("the weight-6 example at class 8") {
    ElemCommutator e = make_elem_commutator(
        {ParamSymbol::xi("a"), ParamSymbol::eta(1, 1), ParamSymbol::xi("a"),
         ParamSymbol::eta(2, 1), ParamSymbol::eta(2, 2), ParamSymbol::eta(2, 3)},
        2);
    CHECK(e.degree() == 4);
    CHECK(k_of(e, 8) == 6);
    CHECK(length_of(e, 8) == LengthValue{3, 4});
  }
  SUBCASE("weight caps at c+1") {
    ElemCommutator e = make_elem_commutator(
        {ParamSymbol::eta(1, 1), ParamSymbol::eta(2, 1), ParamSymbol::eta(2, 2)}, 2);
    CHECK(k_of(e, 2) == 3);
    CHECK(length_of(e, 2) == LengthValue{0, 3});
    CHECK(k_of(e, 5) == 3);
  }
  SUBCASE("degenerate brackets sink to the bottom") {
    ElemCommutator e = make_elem_commutator(
        {ParamSymbol::xi("a"), ParamSymbol::xi("a"), ParamSymbol::eta(1, 1)}, 1);
    // [xi_a, xi_a] is trivial, so the whole bracket is trivial: k = c+1
    CHECK(k_of(e, 4) == 5);
  }
  SUBCASE("lexicographic order on length values") {
    CHECK(LengthValue{2, 10} < LengthValue{3, 0});
    CHECK(LengthValue{5, 4} < LengthValue{5, 7});
  }
  SUBCASE("repeated etas rejected in elementary commutators") {
    CHECK_THROWS_AS(make_elem_commutator(
                        {ParamSymbol::eta(1, 1), ParamSymbol::eta(1, 1)}, 1),
                    Error);
  }
}

TEST_CASE("eproduct decomposition") {
  SUBCASE("words at the bottom of the filtration decompose to nothing") {
    ParamWord w = parse_param_word("[eta{1,1},eta{2,1}]", 2);
    EProduct ep = eproduct_decompose(w, 2, 1);
    CHECK(ep.empty());
  }
  SUBCASE("an elementary word stays a singleton") {
    ParamWord w = parse_param_word("[eta{1,1},eta{2,1}]", 2);
    EProduct ep = eproduct_decompose(w, 2, 3);
    REQUIRE(ep.factors.size() == 1);
    CHECK(ep.factors[0].entries ==
          std::vector<ParamSymbol>{ParamSymbol::eta(1, 1), ParamSymbol::eta(2, 1)});
  }
  SUBCASE("the split of [eta11*eta12, eta21] has three factors") {
    ParamWord w = parse_param_word("[eta{1,1}*eta{1,2},eta{2,1}]", 2);
    EProduct ep = eproduct_decompose(w, 2, 3);
    CHECK(ep.factors.size() == 3);
    for (const auto& f : ep.factors) CHECK(f.degree() >= 1);
    // oracle: exhaustive substitution in UT(4,2)
    FiniteGroup g = make_unitriangular(4, 2);
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        std::vector<Elem> coords{a, b};
        CHECK(substitute(w, g, {}, coords) == substitute(ep, g, {}, coords));
      }
  }
  SUBCASE("inverses decompose through the first-two swap") {
    ParamWord w = parse_param_word("[eta{1,1},eta{2,1}]^-1", 2);
    EProduct ep = eproduct_decompose(w, 2, 3);
    REQUIRE(!ep.empty());
    CHECK(ep.factors[0].entries ==
          std::vector<ParamSymbol>{ParamSymbol::eta(2, 1), ParamSymbol::eta(1, 1)});
    FiniteGroup g = make_unitriangular(4, 2);
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        std::vector<Elem> coords{a, b};
        CHECK(substitute(w, g, {}, coords) == substitute(ep, g, {}, coords));
      }
  }
  SUBCASE("parameters survive into factors but never alone") {
    ParamWord w = parse_param_word("[xi{a}*eta{1,1},eta{2,1}]", 2);
    EProduct ep = eproduct_decompose(w, 2, 2);
    REQUIRE(!ep.empty());
    for (const auto& f : ep.factors) CHECK(f.degree() >= 1);
    FiniteGroup g = make_unitriangular(3, 3);
    for (Elem h = 0; h < g.order(); h += 5) {
      ParamEnv env{{"a", h}};
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) {
          std::vector<Elem> coords{a, b};
          CHECK(substitute(w, g, env, coords) == substitute(ep, g, env, coords));
        }
    }
  }
  SUBCASE("preconditions enforced") {
    // not in gamma_2
    CHECK_THROWS_AS(eproduct_decompose(parse_param_word("eta{1,1}", 1), 2, 3), Error);
    // does not vanish at the identity tuple
    CHECK_THROWS_AS(
        eproduct_decompose(parse_param_word("[xi{a},xi{b}]", 0), 2, 3), Error);
  }
}

TEST_CASE("shift expansion") {
  SUBCASE("degree 2 gives the two cross factors in mask order") {
    EProduct ep{{make_elem_commutator(
                    {ParamSymbol::eta(1, 1), ParamSymbol::eta(2, 1)}, 2)},
                2};
    ShiftExpansion se = shift_expand(ep, {"b1", "b2"}, 3);
    REQUIRE(se.shifted.factors.size() == 2);
    CHECK(se.shifted.factors[0].entries ==
          std::vector<ParamSymbol>{ParamSymbol::xi("b1"), ParamSymbol::eta(2, 1)});
    CHECK(se.shifted.factors[1].entries ==
          std::vector<ParamSymbol>{ParamSymbol::eta(1, 1), ParamSymbol::xi("b2")});
  }
  SUBCASE("degree 1 gives none") {
    EProduct ep{{make_elem_commutator(
                    {ParamSymbol::xi("a"), ParamSymbol::eta(1, 1)}, 1)},
                1};
    ShiftExpansion se = shift_expand(ep, {"b1"}, 3);
    CHECK(se.shifted.factors.empty());
  }
  SUBCASE("degree 3 gives six, each of smaller degree") {
    EProduct ep{{make_elem_commutator({ParamSymbol::eta(1, 1), ParamSymbol::eta(2, 1),
                                       ParamSymbol::eta(3, 1)},
                                      3)},
                3};
    ShiftExpansion se = shift_expand(ep, {"b1", "b2", "b3"}, 3);
    CHECK(se.shifted.factors.size() == 6);
    for (const auto& f : se.shifted.factors) {
      CHECK(f.degree() >= 1);
      CHECK(f.degree() < 3);
    }

    // four-part identity, exhaustive over UT(3,2)^3 x UT(3,2)^3
    FiniteGroup g = make_unitriangular(3, 2);
    ParamWord prod = ep.product();
    for (int bi = 0; bi < g.order() * g.order() * g.order(); ++bi) {
      std::vector<Elem> b{bi % 8, (bi / 8) % 8, bi / 64};
      ParamEnv env{{"b1", b[0]}, {"b2", b[1]}, {"b3", b[2]}};
      for (int gi = 0; gi < 512; ++gi) {
        std::vector<Elem> gt{gi % 8, (gi / 8) % 8, gi / 64};
        std::vector<Elem> bg{g.mul(b[0], gt[0]), g.mul(b[1], gt[1]),
                             g.mul(b[2], gt[2])};
        Elem lhs = substitute(prod, g, env, bg);
        Elem rhs = g.mul(
            g.mul(g.mul(substitute(prod, g, env, b), substitute(prod, g, env, gt)),
                  substitute(se.shifted, g, env, gt)),
            substitute(se.nu, g, env, gt));
        CHECK(lhs == rhs);
      }
    }
  }
  SUBCASE("degree-0 factors are rejected") {
    EProduct ep{{ElemCommutator{{ParamSymbol::xi("a"), ParamSymbol::xi("b")}, 1}}, 1};
    CHECK_THROWS_AS(shift_expand(ep, {"b1"}, 3), Error);
  }
  SUBCASE("four-part identity sampled in UT(4,2)") {
    EProduct ep{{make_elem_commutator({ParamSymbol::eta(1, 1), ParamSymbol::eta(2, 1),
                                       ParamSymbol::eta(3, 1)},
                                      3)},
                3};
    ShiftExpansion se = shift_expand(ep, {"b1", "b2", "b3"}, 3);
    FiniteGroup g = make_unitriangular(4, 2);
    ParamWord prod = ep.product();
    std::mt19937 rng(41);
    std::uniform_int_distribution<Elem> pick(0, g.order() - 1);
    for (int i = 0; i < 3000; ++i) {
      std::vector<Elem> b{pick(rng), pick(rng), pick(rng)};
      std::vector<Elem> gt{pick(rng), pick(rng), pick(rng)};
      ParamEnv env{{"b1", b[0]}, {"b2", b[1]}, {"b3", b[2]}};
      std::vector<Elem> bg{g.mul(b[0], gt[0]), g.mul(b[1], gt[1]),
                           g.mul(b[2], gt[2])};
      Elem lhs = substitute(prod, g, env, bg);
      Elem rhs = g.mul(
          g.mul(g.mul(substitute(prod, g, env, b), substitute(prod, g, env, gt)),
                substitute(se.shifted, g, env, gt)),
          substitute(se.nu, g, env, gt));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("friendly decomposition and the F2 identity") {
  SUBCASE("class-2 bracket keeps its cross terms") {
    ParamWord w = parse_param_word("[eta{1,1},eta{2,1}]", 2);
    auto fd = friendly_decompose(w, 2, handles(2));
    REQUIRE(fd.nu_b.factors.size() == 2);  // shift factors survive at class 2
    CHECK(fd.certificate.strict_descent);
    FiniteGroup g = make_unitriangular(3, 3);
    for (Elem b1 = 0; b1 < g.order(); b1 += 4)
      for (Elem b2 = 0; b2 < g.order(); b2 += 4) {
        ParamEnv env{{"b1", b1}, {"b2", b2}};
        auto res = verify_F2(w, fd.nu_b, handles(2), g, env);
        CHECK(res.ok);
      }
  }
  SUBCASE("class-3 bracket gets a nonempty remainder with strict descent") {
    ParamWord w = parse_param_word("[eta{1,1},eta{2,1}]", 2);
    auto fd = friendly_decompose(w, 3, handles(2));
    CHECK(!fd.nu_b.empty());
    CHECK(fd.certificate.strict_descent);
    CHECK(fd.certificate.max_nu < fd.certificate.max_source);
    FiniteGroup g = make_unitriangular(4, 2);
    std::mt19937 rng(99);
    std::uniform_int_distribution<Elem> pick(0, g.order() - 1);
    for (int i = 0; i < 40; ++i) {
      ParamEnv env{{"b1", pick(rng)}, {"b2", pick(rng)}};
      auto res = verify_F2(w, fd.nu_b, handles(2), g, env,
                           SampleSpec{{{500, 1234 + i}}});
      CHECK(res.ok);
    }
  }
  SUBCASE("deliberately corrupted remainder is caught with a witness") {
    ParamWord w = parse_param_word("[eta{1,1},eta{2,1}]", 2);
    auto fd = friendly_decompose(w, 2, handles(2));
    EProduct bad = fd.nu_b;
    bad.factors.push_back(make_elem_commutator(
        {ParamSymbol::eta(1, 1), ParamSymbol::eta(2, 1)}, 2));
    FiniteGroup g = make_unitriangular(3, 3);
    ParamEnv env{{"b1", 1}, {"b2", 2}};
    auto res = verify_F2(w, bad, handles(2), g, env);
    CHECK_FALSE(res.ok);
    CHECK(!res.witness.empty());
  }
  SUBCASE("identity tuple satisfies F2 by construction") {
    ParamWord w = parse_param_word("[eta{1,1},eta{2,1},eta{2,2}]", 2);
    auto fd = friendly_decompose(w, 3, handles(2));
    FiniteGroup g = make_unitriangular(4, 2);
    ParamEnv env{{"b1", 5}, {"b2", 9}};
    CHECK(substitute(fd.nu_b, g, env, {0, 0}) == FiniteGroup::identity);
  }
  SUBCASE("iterated decomposition strictly descends to the empty product") {
    ParamWord w = parse_param_word("[eta{1,1},eta{2,1}]", 2);
    int c = 3;
    int round = 0;
    LengthValue last{c + 1, 1 << 20};
    while (round < 10) {
      auto fd = friendly_decompose(w, c, handles(2));
      if (fd.source.empty()) break;
      CHECK(fd.certificate.max_source < last);
      last = fd.certificate.max_source;
      if (fd.nu_b.empty()) {
        w = ParamWord(FreeWord<ParamSymbol>{}, 2);
      } else {
        w = fd.nu_b.product();
      }
      ++round;
    }
    CHECK(round < 10);
  }
}

TEST_CASE("finite union mechanism over a vanishing subgroup") {
  // For V = G x G, pick U = Z(G) x Z(G) with omega(U) = 1; the value set of
  // omega is the union over coset representatives b of omega(b) * nu_b(U).
  FiniteGroup g = make_unitriangular(3, 3);
  ParamWord w = parse_param_word("[eta{1,1},eta{2,1}]", 2);
  auto fd = friendly_decompose(w, 2, handles(2));

  auto series = lower_central_series(g);
  REQUIRE(series.terms.size() >= 2);
  const auto& center = series.terms[1].elements;  // = Z(G) for this group

  std::set<Elem> value_set;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) value_set.insert(g.comm(a, b));

  for (Elem u1 : center)
    for (Elem u2 : center)
      CHECK(substitute(w, g, {}, {u1, u2}) == FiniteGroup::identity);

  std::set<Elem> rebuilt;
  for (Elem b1 = 0; b1 < g.order(); ++b1)
    for (Elem b2 = 0; b2 < g.order(); ++b2) {
      bool rep = true;  // coset representatives of Z x Z: minimal in own coset
      for (Elem u : center)
        if (g.mul(b1, u) < b1 || g.mul(b2, u) < b2) rep = false;
      if (!rep) continue;
      ParamEnv env{{"b1", b1}, {"b2", b2}};
      Elem wb = substitute(w, g, env, {b1, b2});
      for (Elem u1 : center)
        for (Elem u2 : center)
          rebuilt.insert(g.mul(wb, substitute(fd.nu_b, g, env, {u1, u2})));
    }
  CHECK(rebuilt == value_set);
}
