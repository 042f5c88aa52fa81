#pragma once

// Finite abelian groups Z_{d1} x ... x Z_{dk}, their subgroups, quotients
// and duals.  Elements are exponent tuples; characters are exponent tuples
// too, chi_m(g) = zeta_n^{sum (n/d_i) m_i c_i} with n the exponent.

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace glim {

struct GroupElem {
  std::vector<int> c;

  auto operator<=>(const GroupElem&) const = default;
  bool operator==(const GroupElem&) const = default;
  std::string to_string() const;
};

/// A character, stored by its exponent tuple (same shape as GroupElem).
using Character = GroupElem;

struct CharOrbit {
  std::vector<int> members;  // character indices, sorted
  int representative;        // lex-min member
  int field_degree() const { return static_cast<int>(members.size()); }
};

class FinAbGroup {
 public:
  explicit FinAbGroup(std::vector<int> factors);
  /// Trivial group [1].
  FinAbGroup() : FinAbGroup(std::vector<int>{1}) {}

  const std::vector<int>& factors() const { return d_->factors; }
  int rank() const { return static_cast<int>(d_->factors.size()); }
  int order() const { return d_->order; }
  int exponent() const { return d_->exponent; }

  GroupElem identity() const { return GroupElem{std::vector<int>(rank(), 0)}; }
  /// Reduces arbitrary integer coordinates; throws on rank mismatch.
  GroupElem make(const std::vector<long>& coords) const;
  bool is_member(const GroupElem& g) const;
  void check_member(const GroupElem& g) const;

  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  GroupElem inv(const GroupElem& a) const;
  GroupElem pow(const GroupElem& a, long k) const;
  int elem_order(const GroupElem& a) const;

  /// Mixed-radix index; index order equals lexicographic order.
  int index(const GroupElem& g) const;
  GroupElem elem(int idx) const { return d_->elems[idx]; }
  const std::vector<GroupElem>& elements() const { return d_->elems; }
  int mul_index(int a, int b) const;
  int inv_index(int a) const { return d_->inv[a]; }

  /// chi(g) as an exponent of zeta_n, n = exponent().
  int char_exp(int chi, int g) const;
  int char_exp(const Character& chi, const GroupElem& g) const;
  int char_order(int chi) const { return elem_order(elem(chi)); }
  /// chi^k as a character index.
  int char_pow(int chi, long k) const { return index(pow(elem(chi), k)); }

  /// Galois orbits of characters; trivial orbit first, then by representative.
  const std::vector<CharOrbit>& orbits() const { return d_->orbits; }
  /// Orbit index of each character.
  int orbit_of(int chi) const { return d_->orbit_of[chi]; }

  bool operator==(const FinAbGroup& o) const { return factors() == o.factors(); }
  std::string to_string() const;

 private:
  struct Data {
    std::vector<int> factors;
    int order = 1;
    int exponent = 1;
    std::vector<GroupElem> elems;
    std::vector<int> mul, inv;
    std::vector<CharOrbit> orbits;
    std::vector<int> orbit_of;
  };
  std::shared_ptr<const Data> d_;
};

class Subgroup {
 public:
  Subgroup(FinAbGroup G, const std::vector<GroupElem>& gens);
  static Subgroup trivial(const FinAbGroup& G) { return Subgroup(G, {}); }
  static Subgroup whole(const FinAbGroup& G);
  /// Subgroup from an element index set; throws if not closed.
  static Subgroup from_indices(const FinAbGroup& G, std::vector<int> idx);

  const FinAbGroup& parent() const { return G_; }
  const std::vector<int>& indices() const { return elems_; }
  std::vector<GroupElem> elements() const;
  const std::vector<GroupElem>& generators() const { return gens_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool contains(int idx) const;
  bool contains(const GroupElem& g) const { return contains(G_.index(g)); }
  bool subset_of(const Subgroup& o) const;

  bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
  std::string to_string() const;

 private:
  Subgroup() = default;
  FinAbGroup G_;
  std::vector<int> elems_;
  std::vector<GroupElem> gens_;
};

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

struct Quotient {
  FinAbGroup Q;
  std::vector<int> proj;  // element index of G -> element index of Q
  GroupElem apply(const FinAbGroup& G, const GroupElem& g) const { return Q.elem(proj[G.index(g)]); }
};

/// G/T in invariant-factor form via Smith normal form.
Quotient quotient(const FinAbGroup& G, const Subgroup& T);

/// T^perp as a subgroup of the dual (characters indexed like elements).
Subgroup perp(const Subgroup& T);
/// S^perp = {g : chi(g) = 1 for every chi in an orbit of S}.
Subgroup perp_orbits(const FinAbGroup& G, const std::vector<int>& S);
/// Orbits lying entirely in a character subgroup X (X is Galois-stable).
std::vector<int> orbits_in(const FinAbGroup& G, const Subgroup& X);

/// Independent generators t_1..t_r with T = <t_1> x ... x <t_r>, orders decreasing.
std::vector<GroupElem> independent_basis(const Subgroup& T);

/// All abelian groups of order <= max_order, invariant-factor form.
std::vector<FinAbGroup> abelian_groups_up_to(int max_order);

/// All subgroups of G, sorted by size then element list.
std::vector<Subgroup> all_subgroups(const FinAbGroup& G);

}  // namespace glim
