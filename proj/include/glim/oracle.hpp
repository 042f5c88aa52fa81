#pragma once

// Brute-force finite-dimensional graded algebras by structure constants.
//
// Every algebra built here (twisted group algebras, graded matrix algebras
// over them, tensor products and opposites) is monomial: the product of two
// basis elements is zero or a root of unity times a basis element.  Products
// are stored as (k, e) meaning zeta_N^e * basis_k, with N = lcm(2, n^2) so
// that every eigenvalue met during idempotent refinement lies in Q(zeta_N).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glim/divalg.hpp"
#include "glim/groupring.hpp"

namespace glim {

struct MonoProduct {
  int k = -1;  // -1: product is zero
  int e = 0;   // exponent of zeta_N
  bool is_zero() const { return k < 0; }
};

class FiniteGradedAlgebra {
 public:
  const FinAbGroup& group() const { return G_; }
  /// N with all structure constants in mu_N.
  int conductor() const { return N_; }
  int dim() const { return static_cast<int>(deg_.size()); }
  /// Degree of basis element i as an element index of G.
  int degree(int i) const { return deg_[i]; }
  MonoProduct product(int i, int j) const;
  /// Basis indices whose sum is the unit (all unit coefficients are 1).
  const std::vector<int>& unit() const { return unit_; }
  std::string label(int i) const;

  /// Recheck associativity on all triples.  Throws InternalError on failure.
  void check_associative() const;

 private:
  friend std::shared_ptr<const FiniteGradedAlgebra> build_twisted(const DivisionClass&);
  friend std::shared_ptr<const FiniteGradedAlgebra> build_matrix(const GroupRingElem&, const std::optional<DivisionClass>&);
  friend std::shared_ptr<const FiniteGradedAlgebra> tensor(std::shared_ptr<const FiniteGradedAlgebra>,
                                                           std::shared_ptr<const FiniteGradedAlgebra>);
  friend std::shared_ptr<const FiniteGradedAlgebra> opposite(std::shared_ptr<const FiniteGradedAlgebra>);

  enum class Kind { kTable, kTensor, kOpposite };
  FiniteGradedAlgebra(FinAbGroup G, int N) : G_(std::move(G)), N_(N) {}

  FinAbGroup G_;
  int N_;
  Kind kind_ = Kind::kTable;
  std::vector<int> deg_;
  std::vector<int> unit_;
  std::vector<MonoProduct> table_;  // dim x dim, kTable only
  std::vector<std::string> labels_;  // kTable only
  std::shared_ptr<const FiniteGradedAlgebra> a_, b_;
};

using AlgebraPtr = std::shared_ptr<const FiniteGradedAlgebra>;

/// Oracle conductor lcm(2, n^2) for the exponent n of G.
int oracle_conductor(const FinAbGroup& G);
/// Maximum dimension (env GLIM_MAX_DIM, default 4096).
int oracle_max_dim();

/// F^sigma T with a lower-triangular cocycle realizing beta.
AlgebraPtr build_twisted(const DivisionClass& D);
/// M_x(F^sigma T): basis E_ij(X_t) of degree g_i t g_j^{-1}.
AlgebraPtr build_matrix(const GroupRingElem& x, const std::optional<DivisionClass>& D = std::nullopt);
AlgebraPtr tensor(AlgebraPtr A, AlgebraPtr B);
AlgebraPtr opposite(AlgebraPtr A);

struct WedderburnInvariant {
  DivisionClass E;             // support T and beta
  FinAbGroup quotient_group;   // G / T
  std::vector<int> coset_multiset;  // multiplicity per element of G/T, canonical shift
  /// The multiset lifted to G on minimal coset representatives.
  GroupRingElem lifted;
  bool operator==(const WedderburnInvariant& o) const {
    return E == o.E && coset_multiset == o.coset_multiset;
  }
  std::string to_string() const;
};

/// (T, beta, image of x in Z>=0(G/T)) of A = M_x(E).  Throws Error unless
/// A is central simple.
WedderburnInvariant graded_simple_decompose(const FiniteGradedAlgebra& A);
/// Same T, same beta, coset multisets equal up to shift.
bool graded_iso_finite(const FiniteGradedAlgebra& A, const FiniteGradedAlgebra& B);

/// Canonical shift of a multiset on G/T, for comparison with brauer_mul.
std::vector<int> canonical_coset_multiset(const GroupRingElem& y, const Subgroup& T, FinAbGroup* quotient_out = nullptr);

struct ValidatedProduct {
  BrauerProduct product;
  bool oracle_agrees;
  bool used_fallback;
};
/// brauer_mul checked against the oracle; on a y mismatch the oracle's y is used.
ValidatedProduct brauer_mul_validated(const DivisionClass& D, const DivisionClass& Dp);

struct PairCheck {
  int i, j;
  bool ok;
  std::string detail;
};
/// Cross-validates brauer_mul on all ordered pairs of classes.  Serial reference.
std::vector<PairCheck> validate_pairs_serial(const std::vector<DivisionClass>& classes);
/// Same, with pairs distributed over OpenMP threads.
std::vector<PairCheck> validate_pairs(const std::vector<DivisionClass>& classes);

}  // namespace glim
