#include "doctest.h"
#include "glim/oracle.hpp"

using namespace glim;

namespace {

DivisionClass pauli(const FinAbGroup& klein) {
  return DivisionClass::from_generators(klein, {{{1, 0}}, {{0, 1}}}, {{0, 1}, {1, 0}}, 2);
}

GroupRingElem elem(const FinAbGroup& G, std::vector<std::pair<GroupElem, int>> terms) {
  GroupRingElem x(G);
  for (auto& [g, k] : terms) x.add(G.index(g), k);
  return x;
}

}  // namespace

TEST_CASE("pauli decomposes to itself") {
  FinAbGroup klein({2, 2});
  auto A = build_twisted(pauli(klein));
  CHECK(A->dim() == 4);
  auto inv = graded_simple_decompose(*A);
  CHECK(inv.E == pauli(klein));
  CHECK(inv.coset_multiset == std::vector<int>{1});
}

TEST_CASE("pauli squared is a graded matrix algebra") {
  FinAbGroup klein({2, 2});
  auto P = build_twisted(pauli(klein));
  auto PP = tensor(P, P);
  auto M = build_matrix(x_H(Subgroup::whole(klein)));
  CHECK(graded_iso_finite(*PP, *M));
  auto inv = graded_simple_decompose(*PP);
  CHECK(inv.E.is_trivial());
  CHECK(inv.coset_multiset == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("coset multisets distinguish matrix gradings") {
  FinAbGroup z2({2});
  auto A = build_matrix(elem(z2, {{{{0}}, 1}, {{{1}}, 1}}));
  auto B = build_matrix(elem(z2, {{{{0}}, 2}}));
  CHECK_FALSE(graded_iso_finite(*A, *B));
  // shifting the tuple does not change the class
  auto C = build_matrix(elem(z2, {{{{1}}, 2}}));
  CHECK(graded_iso_finite(*B, *C));
}

TEST_CASE("non central simple input is rejected") {
  FinAbGroup klein({2, 2});
  auto triv = DivisionClass::from_generators(klein, {{{1, 0}}, {{0, 1}}}, {{0, 0}, {0, 0}}, 2, false);
  CHECK_THROWS_AS(graded_simple_decompose(*build_twisted(triv)), Error);
}

TEST_CASE("tensor degrees and matrix composition") {
  FinAbGroup g({4});
  auto x = elem(g, {{{{0}}, 1}, {{{1}}, 1}});
  auto y = elem(g, {{{{0}}, 1}, {{{2}}, 1}});
  auto A = build_matrix(x), B = build_matrix(y);
  auto AB = tensor(A, B);
  for (int i = 0; i < A->dim(); ++i)
    for (int j = 0; j < B->dim(); ++j)
      CHECK(AB->degree(i * B->dim() + j) == g.mul_index(A->degree(i), B->degree(j)));
  CHECK(graded_iso_finite(*AB, *build_matrix(x * y)));
}

TEST_CASE("matrix over a division algebra") {
  FinAbGroup g({4, 4});
  auto D = DivisionClass::from_generators(g, {{{1, 0}}, {{0, 1}}}, {{0, 1}, {-1, 0}}, 4);
  auto x = elem(g, {{{{0, 0}}, 1}, {{{1, 0}}, 1}});
  auto inv = graded_simple_decompose(*build_matrix(x, D));
  CHECK(inv.E == D);
  CHECK(inv.coset_multiset == std::vector<int>{2});
}

TEST_CASE("brauer products agree with the oracle") {
  for (auto shape : std::vector<std::vector<int>>{{2, 2}, {4, 4}, {2, 4}, {2, 2, 2}}) {
    FinAbGroup G(shape);
    auto classes = all_division_classes(G);
    auto serial = validate_pairs_serial(classes);
    auto par = validate_pairs(classes);
    REQUIRE(serial.size() == par.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      INFO(serial[k].detail);
      CHECK(serial[k].ok);
      CHECK(par[k].ok == serial[k].ok);
    }
    for (auto& D : classes) {
      auto v = brauer_mul_validated(D, D);
      CHECK(v.oracle_agrees);
      CHECK(v.product.E.is_trivial());
    }
  }
}
