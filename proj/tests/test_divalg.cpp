#include "doctest.h"
#include "glim/divalg.hpp"

using namespace glim;

namespace {

DivisionClass pauli(const FinAbGroup& klein) {
  return DivisionClass::from_generators(klein, {{{1, 0}}, {{0, 1}}}, {{0, 1}, {1, 0}}, 2);
}

DivisionClass z4sq(const FinAbGroup& G, int k, bool nondeg = true) {
  return DivisionClass::from_generators(G, {{{1, 0}}, {{0, 1}}}, {{0, k}, {-k, 0}}, 4, nondeg);
}

}  // namespace

TEST_CASE("radical") {
  FinAbGroup klein({2, 2});
  CHECK(radical(pauli(klein)).size() == 1);
  auto triv = DivisionClass::from_generators(klein, {{{1, 0}}, {{0, 1}}}, {{0, 0}, {0, 0}}, 2, false);
  CHECK(radical(triv).size() == 4);
  FinAbGroup g({4, 4});
  CHECK(radical(z4sq(g, 1)).size() == 1);
  CHECK(radical(z4sq(g, 2, false)).size() == 4);
  CHECK_THROWS_AS(z4sq(g, 2), Error);
}

TEST_CASE("input validation") {
  FinAbGroup klein({2, 2});
  CHECK_THROWS_AS(DivisionClass::from_generators(klein, {{{1, 0}}, {{0, 1}}}, {{1, 1}, {1, 0}}, 2), Error);
  FinAbGroup z4({4, 4});
  // zeta_4 pairing between order-2 elements is ill defined
  CHECK_THROWS_AS(DivisionClass::from_generators(z4, {{{2, 0}}, {{0, 2}}}, {{0, 1}, {-1, 0}}, 4), Error);
  CHECK_THROWS_AS(DivisionClass::from_generators(klein, {{{1, 0}}, {{0, 1}}}, {{0, 1}, {1, 0}}, 3), Error);
}

TEST_CASE("brauer lift") {
  FinAbGroup klein({2, 2});
  auto B = brauer_lift(pauli(klein));
  CHECK(radical(B).size() == 1);
  auto B0 = brauer_lift(DivisionClass::trivial(klein));
  for (int x : B0.B) CHECK(x == 0);
  FinAbGroup g({4, 4, 2});
  auto D = DivisionClass::from_generators(g, {{{1, 0, 0}}, {{0, 1, 0}}}, {{0, 1}, {-1, 0}}, 4);
  CHECK(radical(brauer_lift(D)) == perp(D.support()));
  CHECK(division_from_brauer(brauer_lift(D)) == D);
}

TEST_CASE("brauer products") {
  FinAbGroup klein({2, 2});
  auto P = pauli(klein);
  auto r = brauer_mul(P, op_class(P));
  CHECK(r.E.is_trivial());
  CHECK(r.y == x_H(Subgroup::whole(klein)));
  auto r2 = brauer_mul(P, DivisionClass::trivial(klein));
  CHECK(r2.E == P);
  CHECK(r2.y == GroupRingElem::one(klein));
  FinAbGroup g({4, 4});
  auto D = z4sq(g, 1);
  auto Dp = DivisionClass::from_generators(g, {{{2, 0}}, {{0, 2}}}, {{0, 2}, {2, 0}}, 4);
  auto r3 = brauer_mul(D, Dp);
  CHECK(r3.H.size() == 16);
  CHECK(r3.multiplicity * r3.multiplicity * r3.E.support().size() * r3.H.size() ==
        r3.E.support().size() * 4 * r3.E.support().size());
}

TEST_CASE("op class") {
  FinAbGroup klein({2, 2});
  CHECK(op_class(pauli(klein)) == pauli(klein));
  FinAbGroup g({4, 4});
  CHECK(op_class(z4sq(g, 1)) == z4sq(g, 3));
  CHECK(op_class(op_class(z4sq(g, 1))) == z4sq(g, 1));
}

TEST_CASE("class enumeration") {
  CHECK(all_division_classes(FinAbGroup({2, 2})).size() == 2);
  CHECK(all_division_classes(FinAbGroup({2, 2, 2, 2})).size() == 64);
  CHECK(all_division_classes(FinAbGroup({4, 4})).size() == 1 + 1 + 2);
  CHECK(all_division_classes(FinAbGroup({8})).size() == 1);
  CHECK(is_square_type(Subgroup::whole(FinAbGroup({2, 2}))));
  CHECK_FALSE(is_square_type(Subgroup::whole(FinAbGroup({2, 4}))));
}

TEST_CASE("lift invariants over groups of order <= 16") {
  for (const auto& G : abelian_groups_up_to(16)) {
    const auto classes = all_division_classes(G);
    for (const auto& D : classes) {
      CHECK(radical(brauer_lift(D)) == perp(D.support()));
      auto r = brauer_tensor(D, op_class(D));
      CHECK(r.E.is_trivial());
      CHECK(r.y == x_H(D.support()));
      auto r0 = brauer_mul(D, D);
      CHECK(r0.E.is_trivial());
      CHECK(r0.y == x_H(D.support()));
      CHECK(brauer_lift(op_class(D)) == brauer_inverse(brauer_lift(D)));
      for (const auto& Dp : classes) {
        auto p = brauer_mul(D, Dp);
        CHECK(p.y.size() * p.y.size() * p.E.support().size() == D.support().size() * Dp.support().size());
      }
    }
  }
}
