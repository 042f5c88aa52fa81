#include <random>

#include "doctest.h"
#include "glim/cyclotomic.hpp"
#include "glim/error.hpp"

using namespace glim;

namespace {

CycNum random_cyc(int n, std::mt19937& rng) {
  auto f = CyclotomicField::get(n);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rational> c(f->degree());
  for (auto& x : c) x = Rational(d(rng), 1 + (d(rng) & 3));
  return CycNum(f, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(CyclotomicField::get(1)->degree() == 1);
  CHECK(CyclotomicField::get(4)->degree() == 2);
  CHECK(CyclotomicField::get(12)->degree() == 4);
  auto p = CyclotomicField::get(3)->cyclotomic_polynomial();
  CHECK(p == std::vector<Integer>{1, 1, 1});
}

TEST_CASE("field arithmetic examples") {
  CycNum z = CycNum::zeta(4, 1);
  CHECK(z * z == CycNum(4, -1));
  CHECK(CycNum(2, -1).inverse() == CycNum(2, -1));
  CycNum w = CycNum::zeta(3, 1);
  CycNum one(3, 1);
  CHECK((one + w) * (one + w * w) == one);
  CHECK_THROWS_AS(CycNum(5).inverse(), Error);
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(4, 2) == CycNum(4, -1));
  CHECK(root_of_unity(7, 0) == CycNum(7, 1));
  CHECK(root_of_unity(2, 1) == CycNum(2, -1));
  for (int n : {1, 2, 3, 4, 6, 8, 12}) {
    for (int k = 0; k < n; ++k) {
      CycNum z = root_of_unity(n, k), p(n, 1);
      for (int i = 0; i < n; ++i) p *= z;
      CHECK(p == CycNum(n, 1));
      CHECK(z.root_of_unity_exponent() == k);
    }
  }
}

TEST_CASE("norms") {
  CHECK(norm_to_Q(CycNum(4, 1) + CycNum::zeta(4, 1)) == 2);
  CHECK(norm_to_Q(CycNum(4)) == 0);
  CHECK(norm_to_Q(CycNum(2, 3)) == 3);
  CHECK(norm_to_Q(CycNum(8, Rational(1, 2))) == Rational(1, 16));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (int n : {3, 4, 5, 8, 12}) {
    for (int rep = 0; rep < 20; ++rep) {
      CycNum a = random_cyc(n, rng), b = random_cyc(n, rng), c = random_cyc(n, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(norm_to_Q(a * b) == norm_to_Q(a) * norm_to_Q(b));
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(n, 1));
      CHECK(a.galois(n - 1).galois(n - 1) == a);
    }
  }
}

TEST_CASE("lifting between conductors") {
  CycNum i = CycNum::zeta(4, 1);
  CHECK(i.lift(8) == CycNum::zeta(8, 2));
  CHECK(CycNum::zeta(3, 1) * CycNum::zeta(4, 1) == CycNum::zeta(12, 7));
  CHECK_THROWS_AS(i.lift(6), Error);
}

TEST_CASE("valuations and factors") {
  CHECK(padic_valuation(Rational(12, 5), 2) == 2);
  CHECK(padic_valuation(Rational(12, 5), 5) == -1);
  CHECK(prime_factors(Integer(360)) == std::vector<unsigned long>{2, 3, 5});
  CHECK(prime_factors(Integer(1)).empty());
}
