#pragma once

// Eventually periodic direct limits M_{x0} (x) M_{a_1} (x) M_{a_2} (x) ...,
// optionally tensored with a graded-division algebra, and the budgeted
// decision procedures built on their K0 realization
//
//   K+ = U_i (1 / pi_S(b_i)) pi_S(Z>=0 G),   b_i = bar(a_1) ... bar(a_i).
//
// Verdicts are yes / no / unknown.  Yes and no always carry a certificate
// (JSON) whose witnesses can be rechecked by verify_certificate without
// any search.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "glim/divalg.hpp"
#include "glim/groupring.hpp"

namespace glim {

struct LimitDescriptor {
  FinAbGroup G;
  GroupRingElem x0;
  std::vector<GroupRingElem> prefix;
  std::vector<GroupRingElem> cycle;  // repeated forever
  std::optional<DivisionClass> division;

  explicit LimitDescriptor(FinAbGroup g) : G(g), x0(GroupRingElem::one(g)) {}
  LimitDescriptor(GroupRingElem x0_, std::vector<GroupRingElem> prefix_, std::vector<GroupRingElem> cycle_,
                  std::optional<DivisionClass> division_ = std::nullopt);

  /// Throws Error unless every label is a nonzero nonnegative integer element
  /// over G and the cycle is nonempty.
  void validate() const;
  /// a_i on the unrolled sequence, i >= 1.
  const GroupRingElem& label(long i) const;
  long prefix_length() const { return static_cast<long>(prefix.size()); }
  long period() const { return static_cast<long>(cycle.size()); }
  /// Same limit without the division part.
  LimitDescriptor elementary() const;

  bool operator==(const LimitDescriptor& o) const;
};

struct Budget {
  int periods = 32;        // unrolled cycle periods in membership searches
  int primes = 13;         // prime invariants pK+ = K+ for p <= primes
  int search_bound = 8;    // candidate b' = b'_k, k <= search_bound, when S0 != S
  long node_limit = kConeNodeLimit;
};

struct K0Descriptor {
  FinAbGroup G;
  std::vector<int> S;            // sorted orbit indices
  std::vector<int> S0;
  ProjCoords order_unit;         // pi_S(bar x0)
  std::vector<ProjCoords> denom_prefix, denom_cycle;  // pi_S(bar a_i)
  /// Standard form it was computed from (elementary, over G).
  nlohmann::json source;

  /// pi_S(b_i), b_0 = 1.
  ProjCoords b(long i) const;
  /// pi_S of bar of one full cycle period.
  ProjCoords cycle_product() const;
  long prefix_length() const { return static_cast<long>(denom_prefix.size()); }
  long period() const { return static_cast<long>(denom_cycle.size()); }
};

enum class Tri { kYes, kNo, kUnknown };
std::string to_string(Tri t);

struct Verdict {
  Tri value = Tri::kUnknown;
  nlohmann::json certificate;  // {"kind", "reason", ...}
  bool is_yes() const { return value == Tri::kYes; }
  bool is_no() const { return value == Tri::kNo; }
  bool is_unknown() const { return value == Tri::kUnknown; }
};

/// Equivalent descriptor with supp(a_i) = S for every label and supp(x0) ⊆ S.
/// The division part is carried through untouched.
LimitDescriptor standard_form(const LimitDescriptor& d);

struct SupportSets {
  std::vector<int> S, S0;
};
SupportSets compute_S_S0(const LimitDescriptor& d);
/// S^perp in G.
Subgroup perp_of(const FinAbGroup& G, const std::vector<int>& S);

/// K0 realization of the standard form; a division part with support T
/// first pushes everything forward to G/T.
K0Descriptor k0_realization(const LimitDescriptor& d);

Verdict member_K(const K0Descriptor& k, const ProjCoords& z, const Budget& budget = {});
Verdict member_K_plus(const K0Descriptor& k, const ProjCoords& z, const Budget& budget = {});

/// Decides bar(c) K+ = K+ (equivalently A (x) M_c ≅ A when supp(x0) = S).
Verdict scaling_invertible(const K0Descriptor& k, const GroupRingElem& c, const Budget& budget = {});

/// A (x) D ≅ A, via |T| K+ = K+ and T ⊆ S^perp.
Verdict absorbs(const LimitDescriptor& d, const DivisionClass& D, const Budget& budget = {});
/// The other form of the same criterion: x_T K+ = K+.
Verdict absorbs_via_xT(const LimitDescriptor& d, const DivisionClass& D, const Budget& budget = {});

/// Isomorphism of elementary limits.
Verdict iso_elementary(const LimitDescriptor& d, const LimitDescriptor& dp, const Budget& budget = {});
/// Isomorphism of A (x) D and A' (x) D' (division parts read from the descriptors;
/// absent means trivial).
Verdict iso_general(const LimitDescriptor& d, const LimitDescriptor& dp, const Budget& budget = {});

/// M_c (x) A: x0 replaced by c x0.
LimitDescriptor tensor_elementary(const LimitDescriptor& d, const GroupRingElem& c);
/// Labels pushed through G -> G/T; the division part is dropped.
LimitDescriptor quotient_pushforward(const LimitDescriptor& d, const Subgroup& T);

/// [D] ~ [D'] relative to (K, K+): x_E K+ = K+ for D (x) D'^op = M_y(E).
Verdict brauer_equiv(const DivisionClass& D, const DivisionClass& Dp, const K0Descriptor& k,
                     const Budget& budget = {});

/// Rechecks every witness in a certificate tree.  Returns false and sets
/// *why on the first failing node.
bool verify_certificate(const nlohmann::json& cert, std::string* why = nullptr);

}  // namespace glim
