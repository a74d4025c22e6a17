#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alc/rootdata.hpp"

#include <set>

using namespace alc;

TEST_CASE("A1 has one positive root and rho is the fundamental weight") {
  auto rd = build_root_datum("A1");
  CHECK(rd.rank == 1);
  REQUIRE(rd.pos_roots.size() == 1);
  CHECK(rd.rho == IVec{1});
  CHECK(rd.pos_roots[0].fw == IVec{2});
}

TEST_CASE("A2 positive roots are a1, a2, a1+a2") {
  auto rd = build_root_datum("A2");
  std::set<IVec> roots;
  for (const auto& r : rd.pos_roots) roots.insert(r.root);
  CHECK(roots == std::set<IVec>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("A3 closure finds the six known positive roots") {
  auto rd = build_root_datum("A3");
  std::set<IVec> roots;
  for (const auto& r : rd.pos_roots) roots.insert(r.root);
  // Independent oracle: positive roots of A_n are the consecutive segments.
  std::set<IVec> expected;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      IVec v(3, 0);
      for (int k = i; k <= j; ++k) v[k] = 1;
      expected.insert(v);
    }
  CHECK(roots == expected);
}

TEST_CASE("non-simply-laced closures have the known sizes") {
  CHECK(build_root_datum("B2").pos_roots.size() == 4);
  CHECK(build_root_datum("G2").pos_roots.size() == 6);
  CHECK(build_root_datum("B3").pos_roots.size() == 9);
  CHECK(build_root_datum("C3").pos_roots.size() == 9);
}

TEST_CASE("root systems are closed under simple reflections") {
  for (const char* type : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    auto rd = build_root_datum(type);
    std::set<IVec> roots;
    for (const auto& r : rd.pos_roots) {
      roots.insert(r.root);
      IVec neg(r.root);
      for (auto& x : neg) x = -x;
      roots.insert(neg);
    }
    for (const auto& r : rd.pos_roots)
      for (int i = 0; i < rd.rank; ++i) {
        // s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i in root coords
        Int pairing = 0;
        for (int j = 0; j < rd.rank; ++j) pairing += rd.cartan[i][j] * r.root[j];
        IVec image(r.root);
        image[i] -= pairing;
        CHECK(roots.count(image));
      }
  }
}

TEST_CASE("products build block Cartan matrices") {
  auto rd = build_root_datum("A1xA1");
  CHECK(rd.rank == 2);
  CHECK(rd.pos_roots.size() == 2);
  CHECK(rd.cartan[0][1] == 0);
}

TEST_CASE("affine-type Cartan matrix is rejected") {
  IMat affine{{2, -2}, {-2, 2}};
  CHECK_THROWS_AS(build_root_datum(affine), ConfigError);
  CHECK_THROWS_AS(build_root_datum("Q7"), ConfigError);
}

TEST_CASE("pairings of rho and fundamental weights") {
  auto a2 = build_root_datum("A2");
  CHECK(a2.pair_int(a2.rho, a2.pos_roots[0].coroot) == 1);
  // the long root's coroot is the sum of the simple coroots
  IVec highest{1, 1};
  for (const auto& r : a2.pos_roots)
    if (r.root == highest) CHECK(a2.pair_int(a2.rho, r.coroot) == 2);

  auto a3 = build_root_datum("A3");
  Vec omega1{Rat(1), Rat(0), Rat(0)};
  for (const auto& r : a3.pos_roots)
    if (r.root == IVec{0, 0, 1}) CHECK(a3.pair(omega1, r.coroot) == 0);
}

TEST_CASE("pairing is bilinear") {
  auto rd = build_root_datum("A2");
  Vec u{Rat(2), Rat(-1)}, v{Rat(1, 3), Rat(5)};
  for (const auto& r : rd.pos_roots) {
    CHECK(rd.pair(vadd(u, v), r.coroot) == rd.pair(u, r.coroot) + rd.pair(v, r.coroot));
    CHECK(rd.pair(vscale(Rat(7, 2), u), r.coroot) == Rat(7, 2) * rd.pair(u, r.coroot));
  }
}

TEST_CASE("dot action: identity and s1 at zero") {
  auto rd = build_root_datum("A2");
  Weight zero{{Rat(0), Rat(0)}};
  CHECK(dot_action(rd, {}, zero).coords == zero.coords);
  // s1 . 0 = s1(rho) - rho = -alpha1
  auto w = dot_action(rd, {0}, zero);
  CHECK(w.coords == Vec{Rat(-2), Rat(1)});
}

TEST_CASE("dot action satisfies the braid relation on sampled weights") {
  auto rd = build_root_datum("A2");
  for (Int x = -3; x <= 3; ++x)
    for (Int y = -3; y <= 3; ++y) {
      Weight lam{{Rat(x), Rat(y)}};
      CHECK(dot_action(rd, {0, 1, 0}, lam).coords ==
            dot_action(rd, {1, 0, 1}, lam).coords);
    }
}

TEST_CASE("dot action is compatible with composition") {
  auto rd = build_root_datum("A2");
  Weight lam{{Rat(2), Rat(-5)}};
  auto lhs = dot_action(rd, {0, 1}, lam);
  auto rhs = dot_action(rd, {0}, dot_action(rd, {1}, lam));
  CHECK(lhs.coords == rhs.coords);
  // involutions
  CHECK(dot_action(rd, {0, 0}, lam).coords == lam.coords);
  CHECK(dot_action(rd, {1, 1}, lam).coords == lam.coords);
}

TEST_CASE("Weyl group sizes") {
  CHECK(weyl_elements(build_root_datum("A2")).size() == 6);
  CHECK(weyl_elements(build_root_datum("A3")).size() == 24);
  CHECK(weyl_elements(build_root_datum("B2")).size() == 8);
  CHECK(weyl_elements(build_root_datum("G2")).size() == 12);
}

TEST_CASE("Levi sublattices") {
  auto a2 = build_root_datum("A2");
  CHECK(levi_sublattice(a2, {}).lattice_basis == std::vector<int>{0, 1});
  CHECK(levi_sublattice(a2, {0, 1}).lattice_basis.empty());
  auto a3 = build_root_datum("A3");
  auto ls = levi_sublattice(a3, {1});
  CHECK(ls.lattice_basis == std::vector<int>{0, 2});
  REQUIRE(ls.levi_roots.size() == 1);
  CHECK(a3.pos_roots[ls.levi_roots[0]].root == IVec{0, 1, 0});
}

TEST_CASE("Levi basis annihilates every Levi coroot") {
  auto a3 = build_root_datum("A3");
  for (auto levi : std::vector<std::vector<int>>{{1}, {0}, {0, 1}, {2}}) {
    auto ls = levi_sublattice(a3, levi);
    for (int b : ls.lattice_basis) {
      Vec omega(a3.rank, Rat(0));
      omega[b] = 1;
      for (int r : ls.levi_roots) CHECK(a3.pair(omega, a3.pos_roots[r].coroot) == 0);
    }
  }
}

TEST_CASE("p-regularity at A1") {
  auto rd = build_root_datum("A1");
  auto r0 = is_p_regular(rd, {0}, 5);
  CHECK(r0.pairings_nonzero);
  CHECK(r0.stabilizer_trivial);
  auto r4 = is_p_regular(rd, {4}, 5);  // <4 + 1, coroot> = 5
  CHECK_FALSE(r4.pairings_nonzero);
  CHECK_FALSE(r4.stabilizer_trivial);
}

TEST_CASE("p must be prime") {
  auto rd = build_root_datum("A1");
  CHECK_THROWS_AS(is_p_regular(rd, {0}, 6), ConfigError);
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("both regularity tests agree on a box for A2, p=5") {
  auto rd = build_root_datum("A2");
  for (Int x = -10; x <= 10; ++x)
    for (Int y = -10; y <= 10; ++y) {
      auto r = is_p_regular(rd, {x, y}, 5);
      CHECK(r.pairings_nonzero == r.stabilizer_trivial);
    }
}
