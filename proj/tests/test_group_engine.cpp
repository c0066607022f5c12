#include <doctest.h>

#include <numeric>
#include <set>

#include "verbal/catalog.hpp"
#include "verbal/group.hpp"

using namespace verbal;

TEST_CASE("catalog constructor basics") {
  CHECK(make_cyclic(1).order() == 1);
  CHECK(make_cyclic(12).order() == 12);
  CHECK(make_dihedral(4).order() == 8);
  CHECK(make_symmetric(3).order() == 6);
  CHECK(make_symmetric(6).order() == 720);
  CHECK(make_quaternion8().order() == 8);
  CHECK(make_heisenberg(3).order() == 27);
  CHECK(make_unitriangular(3, 2).order() == 8);
  CHECK(make_unitriangular(4, 3).order() == 729);
  CHECK_THROWS_AS(make_symmetric(7), Error);
  CHECK_THROWS_AS(make_unitriangular(6, 2), Error);
  CHECK_THROWS_AS(make_unitriangular(5, 5), Error);  // 5^10 over the cap
  CHECK_THROWS_AS(make_wreath_cyclic(4, 2), Error);  // 4 is not prime
}

TEST_CASE("unitriangular groups have class n-1") {
  CHECK(nilpotency_class(make_unitriangular(3, 2)) == 2);
  CHECK(nilpotency_class(make_unitriangular(3, 3)) == 2);
  CHECK(nilpotency_class(make_unitriangular(4, 2)) == 3);
  CHECK(nilpotency_class(make_unitriangular(5, 2)) == 4);
}

TEST_CASE("burnside group of exponent 3") {
  FiniteGroup b = make_burnside_2_3();
  CHECK(b.order() == 27);
  CHECK(exponent(b) == 3);
  CHECK(nilpotency_class(b) == 2);
}

TEST_CASE("wreath products") {
  FiniteGroup w22 = make_wreath_cyclic(2, 2);
  CHECK(w22.order() == 8);
  // isomorphism-invariant fingerprint: C2 wr C2 is dihedral of order 8
  std::map<int, int> d4_profile{{1, 1}, {2, 5}, {4, 2}};
  CHECK(w22.order_profile() == d4_profile);
  CHECK(make_dihedral(4).order_profile() == d4_profile);

  CHECK(make_wreath_cyclic(2, 1).order() == 2);
  CHECK(make_wreath_cyclic(3, 2).order() == 18);
}

TEST_CASE("extraspecial groups of order p^3") {
  FiniteGroup plus = make_extraspecial(3, ExtraspecialKind::exponent_p);
  CHECK(plus.order() == 27);
  CHECK(exponent(plus) == 3);
  FiniteGroup minus = make_extraspecial(3, ExtraspecialKind::exponent_p_squared);
  CHECK(minus.order() == 27);
  CHECK(exponent(minus) == 9);
  CHECK(nilpotency_class(minus) == 2);
  CHECK(make_extraspecial(2, ExtraspecialKind::exponent_p).order_profile() ==
        make_dihedral(4).order_profile());
  CHECK(make_extraspecial(2, ExtraspecialKind::exponent_p_squared).order_profile() ==
        make_quaternion8().order_profile());
}

TEST_CASE("subgroup closures") {
  FiniteGroup s3 = make_symmetric(3);
  CHECK(subgroup_closure(s3, {}).elements == std::vector<Elem>{0});

  Elem c3 = *s3.element_by_label("(123)");
  Subgroup a3 = normal_closure(s3, {c3});
  CHECK(a3.order() == 3);
  CHECK(is_normal(a3));

  Elem t = *s3.element_by_label("(12)");
  Subgroup all = subgroup_closure(s3, {c3, t});
  CHECK(all.order() == 6);
}

TEST_CASE("orbit-stabilizer per instance") {
  for (const auto& g : {make_symmetric(3), make_dihedral(4), make_quaternion8()}) {
    for (Elem x = 0; x < g.order(); ++x) {
      auto cls = conjugacy_class(g, x);
      CHECK(cls.size() * centralizer(g, x).order() == static_cast<std::size_t>(g.order()));
    }
  }
}

TEST_CASE("quotients") {
  SUBCASE("by the trivial subgroup: same table") {
    FiniteGroup g = make_dihedral(3);
    auto q = quotient(g, trivial_subgroup(g));
    REQUIRE(q.group.order() == g.order());
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) CHECK(q.group.mul(a, b) == g.mul(a, b));
  }
  SUBCASE("Q8 by its center") {
    FiniteGroup q8 = make_quaternion8();
    Subgroup center{q8, {0, 1}};  // {1, -1}
    CHECK(is_normal(center));
    auto q = quotient(q8, center);
    CHECK(q.group.order() == 4);
    CHECK(exponent(q.group) == 2);  // Klein four group
  }
  SUBCASE("S3 by A3") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup a3 = normal_closure(s3, {*s3.element_by_label("(123)")});
    auto q = quotient(s3, a3);
    CHECK(q.group.order() == 2);
  }
  SUBCASE("projection is a homomorphism") {
    FiniteGroup g = make_dihedral(4);
    Subgroup center = normal_closure(g, {g.power(*g.element_by_label("r"), 2)});
    auto q = quotient(g, center);
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        CHECK(q.projection[g.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));
  }
  SUBCASE("non-normal subgroup rejected") {
    FiniteGroup s3 = make_symmetric(3);
    Subgroup flip = subgroup_closure(s3, {*s3.element_by_label("(12)")});
    CHECK_THROWS_AS(quotient(s3, flip), Error);
  }
}

TEST_CASE("series") {
  FiniteGroup s3 = make_symmetric(3);
  auto ds = derived_series(s3);
  REQUIRE(ds.terms.size() == 3);
  CHECK(ds.terms[0].order() == 6);
  CHECK(ds.terms[1].order() == 3);
  CHECK(ds.terms[2].order() == 1);

  CHECK_FALSE(nilpotency_class(s3).has_value());
  CHECK(nilpotency_class(make_cyclic(6)) == 1);
  CHECK(nilpotency_class(make_cyclic(1)) == 0);

  // lower central terms are invariant under conjugation
  FiniteGroup ut = make_unitriangular(4, 2);
  for (const auto& term : lower_central_series(ut).terms)
    for (Elem x : term.elements)
      for (Elem g = 0; g < ut.order(); ++g) CHECK(term.contains(ut.conjugate(x, g)));
}

TEST_CASE("exponent") {
  CHECK(exponent(make_cyclic(6)) == 6);
  CHECK(exponent(make_quaternion8()) == 4);
  CHECK(exponent(make_dihedral(4)) == 4);
}

TEST_CASE("sylow decomposition") {
  SUBCASE("cyclic") {
    auto parts = sylow_decomposition(make_cyclic(6));
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(2).order() == 2);
    CHECK(parts.at(3).order() == 3);
  }
  SUBCASE("C12 x Q8") {
    FiniteGroup g = make_direct_product(make_cyclic(12), make_quaternion8());
    auto parts = sylow_decomposition(g);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(2).order() == 32);
    CHECK(parts.at(3).order() == 3);
  }
  SUBCASE("p-group has a single factor") {
    auto parts = sylow_decomposition(make_quaternion8());
    REQUIRE(parts.size() == 1);
    CHECK(parts.at(2).order() == 8);
  }
  SUBCASE("non-nilpotent rejected") {
    CHECK_THROWS_AS(sylow_decomposition(make_symmetric(3)), Error);
  }
}

TEST_CASE("normal subgroup enumeration") {
  FiniteGroup s3 = make_symmetric(3);
  auto normals = all_normal_subgroups(s3);
  REQUIRE(normals.size() == 3);  // 1, A3, S3
  CHECK(normals[0].order() == 1);
  CHECK(normals[1].order() == 3);
  CHECK(normals[2].order() == 6);

  FiniteGroup q8 = make_quaternion8();
  CHECK(all_normal_subgroups(q8).size() == 6);  // 1, Z, i, j, k, Q8
}

TEST_CASE("cayley json round trip and validation") {
  FiniteGroup g = make_dihedral(3);
  FiniteGroup back = group_from_cayley_json(group_to_cayley_json(g), "D3-copy");
  REQUIRE(back.order() == g.order());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) CHECK(back.mul(a, b) == g.mul(a, b));
  CHECK(back.label(0) == "e");

  // corrupted table: not associative
  CHECK_THROWS_AS(
      group_from_cayley_json("{\"order\":3,\"mul\":[[0,1,2],[1,2,0],[2,1,0]]}", "bad"),
      Error);
  CHECK_THROWS_AS(group_from_cayley_json("{\"order\":2}", "bad"), Error);
  CHECK_THROWS_AS(group_from_cayley_json("not json", "bad"), Error);
}

TEST_CASE("group lookup by name") {
  CHECK(group_by_name("S3").order() == 6);
  CHECK(group_by_name("c6").order() == 6);
  CHECK(group_by_name("q8").order() == 8);
  CHECK(group_by_name("UT3_2").order() == 8);
  CHECK(group_by_name("ut4_2").order() == 64);
  CHECK(group_by_name("Heis3").order() == 27);
  CHECK(group_by_name("wr2_2").order() == 8);
  CHECK(group_by_name("B23").order() == 27);
  CHECK(group_by_name("ES3+").order() == 27);
  CHECK(group_by_name("es3-").order() == 27);
  CHECK_THROWS_AS(group_by_name("nope"), Error);
}

TEST_CASE("catalog sweep stays within bounds") {
  auto groups = catalog_groups(16);
  CHECK(groups.size() >= 20);
  for (const auto& g : groups) CHECK(g.order() <= 16);
}

TEST_CASE("element power and order") {
  FiniteGroup c6 = make_cyclic(6);
  Elem g = 1;
  CHECK(c6.power(g, 0) == 0);
  CHECK(c6.power(g, 7) == 1);
  CHECK(c6.power(g, -1) == 5);
  CHECK(c6.element_order(g) == 6);
  CHECK(c6.element_order(c6.power(g, 2)) == 3);
}
