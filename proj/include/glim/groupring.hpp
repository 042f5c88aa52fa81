#pragma once

// The group ring QG of a finite abelian group, character coordinates
// pi_j(z) = chi_j(z), and the two feasibility kernels: membership of a
// coordinate vector in pi_S(ZG) (a lattice) and in pi_S(Z>=0 G) (a cone).

#include <optional>
#include <string>
#include <vector>

#include "glim/abelian.hpp"
#include "glim/cyclotomic.hpp"
#include "glim/error.hpp"

namespace glim {

/// Thrown when the integer feasibility search hits its node cap.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class GroupRingElem {
 public:
  explicit GroupRingElem(FinAbGroup G);
  static GroupRingElem scalar(const FinAbGroup& G, const Rational& q);
  static GroupRingElem one(const FinAbGroup& G) { return scalar(G, 1); }
  static GroupRingElem basis(const FinAbGroup& G, const GroupElem& g, const Rational& c = 1);

  const FinAbGroup& group() const { return G_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int idx) const { return c_[idx]; }
  const Rational& coeff(const GroupElem& g) const { return c_[G_.index(g)]; }
  void set(int idx, const Rational& q);
  void add(int idx, const Rational& q);

  bool is_zero() const;
  bool is_integer() const;
  bool is_nonneg_integer() const;
  /// |x| = sum of coefficients.
  Rational size() const;

  GroupRingElem operator+(const GroupRingElem& o) const;
  GroupRingElem operator-(const GroupRingElem& o) const;
  GroupRingElem operator*(const GroupRingElem& o) const;
  GroupRingElem operator*(const Rational& q) const;
  GroupRingElem& operator*=(const GroupRingElem& o) { return *this = *this * o; }
  GroupRingElem& operator+=(const GroupRingElem& o) { return *this = *this + o; }
  bool operator==(const GroupRingElem& o) const { return G_ == o.G_ && c_ == o.c_; }
  bool operator!=(const GroupRingElem& o) const { return !(*this == o); }

  /// g -> g^{-1} on coefficients.
  GroupRingElem bar() const;
  /// Multiplication by the basis element g.
  GroupRingElem shift(int g) const;
  GroupRingElem pow(int k) const;

  std::string to_string() const;

 private:
  void check_same(const GroupRingElem& o) const;
  FinAbGroup G_;
  std::vector<Rational> c_;
};

GroupRingElem x_H(const Subgroup& H);
/// chi(z) for the character with index chi.
CycNum char_eval(const GroupRingElem& z, int chi);
/// Orbit indices j with pi_j(z) != 0.
std::vector<int> supp_orbits(const GroupRingElem& z);
GroupRingElem idempotent_e_j(const FinAbGroup& G, int j);

/// Coordinates (chi_j(z))_{j in S}, chi_j the orbit representative.
struct ProjCoords {
  FinAbGroup G;
  std::vector<int> S;  // sorted orbit indices
  std::vector<CycNum> values;

  static ProjCoords constant(const FinAbGroup& G, const std::vector<int>& S, const Rational& q);
  bool is_zero() const;
  /// Every coordinate nonzero.
  bool is_unit() const;
  std::optional<CycNum> at(int j) const;
  ProjCoords operator*(const ProjCoords& o) const;
  ProjCoords operator+(const ProjCoords& o) const;
  ProjCoords operator-(const ProjCoords& o) const;
  ProjCoords operator*(const Rational& q) const;
  /// Componentwise inverse; throws on a zero coordinate.
  ProjCoords inverse() const;
  ProjCoords operator/(const ProjCoords& o) const { return *this * o.inverse(); }
  bool operator==(const ProjCoords& o) const;
  /// Restrict to a subset of S.
  ProjCoords restrict(const std::vector<int>& sub) const;
  std::string to_string() const;
};

ProjCoords proj_coords(const GroupRingElem& z, const std::vector<int>& S);
/// Batch coordinates; the serial version is the reference for the parallel one.
std::vector<ProjCoords> proj_coords_batch_serial(const std::vector<GroupRingElem>& zs, const std::vector<int>& S);
std::vector<ProjCoords> proj_coords_batch(const std::vector<GroupRingElem>& zs, const std::vector<int>& S);

/// Integer witness z in ZG with pi_S(z) = target, if any (exact, via HNF).
std::optional<GroupRingElem> lattice_witness(const ProjCoords& target);
bool lattice_member(const ProjCoords& target);

/// Default node cap for the branch-and-bound search.
constexpr long kConeNodeLimit = 200000;

/// Witness z in Z>=0 G with pi_S(z) = target, if any.  Complete; throws
/// SearchBudgetExceeded beyond node_limit branch-and-bound nodes.
std::optional<GroupRingElem> cone_witness(const ProjCoords& target, long node_limit = kConeNodeLimit);
bool cone_member(const ProjCoords& target, long node_limit = kConeNodeLimit);

/// All orbit indices of G.
std::vector<int> all_orbits(const FinAbGroup& G);

}  // namespace glim
