#pragma once

// Graded-division algebras F^sigma T up to isomorphism, stored as a support
// subgroup T with its commutation bicharacter beta, and graded Brauer
// arithmetic through bicharacters on the dual group.

#include <string>
#include <vector>

#include "glim/abelian.hpp"
#include "glim/groupring.hpp"

namespace glim {

class DivisionClass {
 public:
  /// beta(g_i, g_j) = zeta_N^{M_ij} on the given generators of T, N = zeta_order.
  /// Checks well-definedness and the alternating law; nondegeneracy unless waived.
  static DivisionClass from_generators(const FinAbGroup& G, const std::vector<GroupElem>& gens,
                                       const std::vector<std::vector<long>>& M, int zeta_order,
                                       bool require_nondegenerate = true);
  /// Full table of exponents of zeta_n, n = exponent(G), indexed by positions in T.
  static DivisionClass from_table(const Subgroup& T, std::vector<int> table, bool require_nondegenerate = true);
  static DivisionClass trivial(const FinAbGroup& G);

  const FinAbGroup& group() const { return T_.parent(); }
  const Subgroup& support() const { return T_; }
  int zeta_order() const { return group().exponent(); }
  /// beta(s, t) as an exponent of zeta_n; s, t are element indices of G lying in T.
  int beta_exp(int s, int t) const;
  const std::vector<int>& table() const { return table_; }

  /// Independent generators of T and beta on them.
  std::vector<GroupElem> basis() const { return independent_basis(T_); }
  std::vector<std::vector<long>> basis_matrix() const;

  bool is_trivial() const { return T_.size() == 1; }
  bool is_nondegenerate() const;

  bool operator==(const DivisionClass& o) const { return T_ == o.T_ && table_ == o.table_; }
  std::string to_string() const;

 private:
  DivisionClass(Subgroup T, std::vector<int> table);
  Subgroup T_;
  std::vector<int> pos_;    // G index -> position in T, or -1
  std::vector<int> table_;  // |T| x |T|
};

/// {t in T : beta(t, s) = 1 for all s in T}.
Subgroup radical(const DivisionClass& D);

/// Elementary divisors of T come in equal pairs.
bool is_square_type(const Subgroup& T);

/// Alternating bicharacter on the dual group, B[chi * |G| + psi] exponent of zeta_n.
struct BrauerClass {
  FinAbGroup G;
  std::vector<int> B;
  int at(int chi, int psi) const { return B[static_cast<std::size_t>(chi) * G.order() + psi]; }
  bool operator==(const BrauerClass& o) const { return G == o.G && B == o.B; }
};

/// B(chi, psi) = chi(t_psi), where beta(t_psi, .) = psi on T.
BrauerClass brauer_lift(const DivisionClass& D);
BrauerClass brauer_product(const BrauerClass& a, const BrauerClass& b);
BrauerClass brauer_inverse(const BrauerClass& a);
/// Radical of B, a subgroup of the dual (characters indexed like elements).
Subgroup radical(const BrauerClass& B);
/// The division class whose lift is B.
DivisionClass division_from_brauer(const BrauerClass& B);

/// Same support, beta inverted.
DivisionClass op_class(const DivisionClass& D);

struct BrauerProduct {
  DivisionClass E;
  GroupRingElem y;
  Subgroup H;  // T T'
  int multiplicity;
};

/// D (x) D'^op = M_y(E), y uniform with multiplicity m on T_E-coset representatives of H.
BrauerProduct brauer_mul(const DivisionClass& D, const DivisionClass& Dp);
/// D (x) D' = M_y(E); equals brauer_mul(D, op_class(D')).
BrauerProduct brauer_tensor(const DivisionClass& D, const DivisionClass& Dp);

/// All nondegenerate classes with support T (empty unless T is of square type).
std::vector<DivisionClass> division_classes_on(const Subgroup& T);
/// All nondegenerate classes over G, ordered by support then table.
std::vector<DivisionClass> all_division_classes(const FinAbGroup& G);

}  // namespace glim
