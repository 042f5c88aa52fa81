// Isomorphism criteria for limits: elementary ones first, then limits
// tensored with graded-division algebras.

#include "glim/error.hpp"
#include "glim/limits.hpp"
#include "glim/serialize.hpp"
#include "limits_internal.hpp"

namespace glim {

using namespace detail;

namespace {

std::vector<int> primes_up_to(int n) {
  std::vector<int> ps;
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int q : ps)
      if (p % q == 0) prime = false;
    if (prime) ps.push_back(p);
  }
  return ps;
}

GroupRingElem cycle_product(const LimitDescriptor& sf) {
  GroupRingElem p = GroupRingElem::one(sf.G);
  for (const auto& c : sf.cycle) p = p * c;
  return p;
}

struct Side {
  LimitDescriptor sf;
  K0Descriptor k;
};

// lambda K+ = K'+ given the two stability conditions already certified:
// (a) lambda / b_P in K'+ and (a') lambda^{-1} / b'_P' in K+.
struct LambdaCheck {
  Verdict a, ap;
};

LambdaCheck check_lambda(const Side& A, const Side& B, const ProjCoords& lambda, const Budget& budget) {
  const ProjCoords za = lambda / A.k.b(A.k.prefix_length());
  const ProjCoords zb = lambda.inverse() / B.k.b(B.k.prefix_length());
  return {member_K_plus(B.k, za, budget), member_K_plus(A.k, zb, budget)};
}

// b, b' in Z>=0 G of support S with b x0bar = b' x0'bar, from the witness of (a).
std::pair<GroupRingElem, GroupRingElem> assemble_b(const Side& A, const Side& B, const Verdict& a) {
  const auto& G = A.sf.G;
  const GroupRingElem w = group_ring_from_json(G, a.certificate.at("witness"), "witness", false);
  const long i = a.certificate.at("index").get<long>();
  GroupRingElem b = w * label_product(A.sf, 1, A.sf.prefix_length(), true);
  GroupRingElem bp = label_product(B.sf, 1, i, true);
  const auto& S = A.k.S;
  if (supp_orbits(b) != S || supp_orbits(bp) != S) {
    const GroupRingElem q = cycle_product(B.sf).bar();
    b = b * q;
    bp = bp * q;
  }
  GLIM_ASSERT(supp_orbits(b) == S && supp_orbits(bp) == S, "b, b' do not have support S");
  GLIM_ASSERT(b * A.sf.x0.bar() == bp * B.sf.x0.bar(), "b x0bar != b' x0'bar");
  return {b, bp};
}

}  // namespace

Verdict iso_elementary(const LimitDescriptor& d, const LimitDescriptor& dp, const Budget& budget) {
  GLIM_CHECK(d.G == dp.G, "limits graded by different groups");
  GLIM_CHECK((!d.division || d.division->is_trivial()) && (!dp.division || dp.division->is_trivial()),
             "iso_elementary expects elementary limits");
  json c = make_cert("iso_elementary", Tri::kUnknown, "");
  const Side A{standard_form(d.elementary()), {}};
  const Side B0{standard_form(dp.elementary()), {}};
  c["descriptor"] = to_json(A.sf);
  c["descriptor_prime"] = to_json(B0.sf);
  if (A.sf == B0.sf) {
    const GroupRingElem q = cycle_product(A.sf).bar();
    c["reason"] = "identical standard forms";
    c["b"] = to_json(q);
    c["b_prime"] = to_json(q);
    return verdict(Tri::kYes, c);
  }
  Side Aa{A.sf, k0_realization(A.sf)};
  Side B{B0.sf, k0_realization(B0.sf)};
  if (Aa.k.S != B.k.S) {
    c["reason"] = "S differs";
    c["S"] = Aa.k.S;
    c["S_prime"] = B.k.S;
    return verdict(Tri::kNo, c);
  }
  if (Aa.k.S0 != B.k.S0) {
    c["reason"] = "S0 differs";
    c["S0"] = Aa.k.S0;
    c["S0_prime"] = B.k.S0;
    return verdict(Tri::kNo, c);
  }
  const auto& G = d.G;
  for (int p : primes_up_to(budget.primes)) {
    const GroupRingElem pc = GroupRingElem::scalar(G, p);
    Verdict u = scaling_invertible(Aa.k, pc, budget), v = scaling_invertible(B.k, pc, budget);
    if ((u.is_yes() && v.is_no()) || (u.is_no() && v.is_yes())) {
      c["reason"] = "prime invariant p=" + std::to_string(p);
      c["prime"] = p;
      c["children"] = json::array({u.certificate, v.certificate});
      return verdict(Tri::kNo, c);
    }
  }
  // Q K'+ = K'+ and Q' K+ = K+ are necessary for any lambda.
  Verdict stab = scaling_invertible(B.k, cycle_product(Aa.sf), budget);
  Verdict stabp = scaling_invertible(Aa.k, cycle_product(B.sf), budget);
  if (stab.is_no() || stabp.is_no()) {
    c["reason"] = "a cycle product does not act invertibly on the other K+";
    c["children"] = json::array({stab.is_no() ? stab.certificate : stabp.certificate});
    return verdict(Tri::kNo, c);
  }
  const auto& S = Aa.k.S;
  const auto& S0 = Aa.k.S0;
  const ProjCoords x0b = proj_coords(Aa.sf.x0.bar(), S);
  const ProjCoords x0pb = proj_coords(B.sf.x0.bar(), S);
  auto accept = [&](const ProjCoords& lambda, LambdaCheck& lc) {
    auto [b, bp] = assemble_b(Aa, B, lc.a);
    c["reason"] = "b, b' found";
    c["b"] = to_json(b);
    c["b_prime"] = to_json(bp);
    c["lambda"] = to_json(lambda);
    c["children"] = json::array({lc.a.certificate, lc.ap.certificate, stab.certificate, stabp.certificate});
    return verdict(Tri::kYes, c);
  };
  if (S0 == S) {
    // lambda is forced to x0'bar / x0bar: the criterion is decided by four conditions
    const ProjCoords lambda = x0pb / x0b;
    LambdaCheck lc = check_lambda(Aa, B, lambda, budget);
    if (lc.a.is_no() || lc.ap.is_no()) {
      c["reason"] = "the forced scaling x0'bar / x0bar does not map K+ onto K'+";
      c["lambda"] = to_json(lambda);
      c["children"] = json::array({lc.a.is_no() ? lc.a.certificate : lc.ap.certificate});
      return verdict(Tri::kNo, c);
    }
    if (lc.a.is_yes() && lc.ap.is_yes() && stab.is_yes() && stabp.is_yes()) return accept(lambda, lc);
    c["reason"] = "budget exhausted on the forced scaling";
    return verdict(Tri::kUnknown, c);
  }
  if (!(stab.is_yes() && stabp.is_yes())) {
    c["reason"] = "cycle stability undecided within budget";
    return verdict(Tri::kUnknown, c);
  }
  // lambda free off S0: b' runs over partial products of the a' sequence
  const ProjCoords x0b0 = proj_coords(Aa.sf.x0.bar(), S0);
  const ProjCoords x0pb0 = proj_coords(B.sf.x0.bar(), S0);
  for (long kk = 0; kk <= budget.search_bound; ++kk) {
    const GroupRingElem bp = label_product(B.sf, 1, kk, true);
    ProjCoords target = proj_coords(bp, S0) * x0pb0 / x0b0;
    std::optional<GroupRingElem> b;
    try {
      b = cone_witness(target, budget.node_limit);
    } catch (const SearchBudgetExceeded&) {
      continue;
    }
    if (!b) continue;
    const ProjCoords pb = proj_coords(*b, S);
    if (!pb.is_unit()) continue;
    const ProjCoords lambda = pb / proj_coords(bp, S);
    LambdaCheck lc = check_lambda(Aa, B, lambda, budget);
    if (lc.a.is_yes() && lc.ap.is_yes()) return accept(lambda, lc);
  }
  c["reason"] = "no scaling found among " + std::to_string(budget.search_bound + 1) + " candidates";
  return verdict(Tri::kUnknown, c);
}

Verdict iso_general(const LimitDescriptor& d, const LimitDescriptor& dp, const Budget& budget) {
  GLIM_CHECK(d.G == dp.G, "limits graded by different groups");
  const auto& G = d.G;
  const DivisionClass D = d.division ? *d.division : DivisionClass::trivial(G);
  const DivisionClass Dp = dp.division ? *dp.division : DivisionClass::trivial(G);
  GLIM_CHECK(D.is_nondegenerate() && Dp.is_nondegenerate(), "division classes must be central simple");
  json c = make_cert("iso_general", Tri::kUnknown, "");
  // D (x) D'^op = M_y(E)
  const BrauerProduct bp = brauer_mul(D, Dp);
  c["E"] = to_json(bp.E);
  c["y"] = to_json(bp.y);
  Verdict vi = absorbs(d.elementary(), bp.E, budget);
  if (vi.is_no()) {
    c["reason"] = "(i) fails: x_E K+ != K+";
    c["children"] = json::array({vi.certificate});
    return verdict(Tri::kNo, c);
  }
  Verdict vii = iso_elementary(tensor_elementary(d.elementary(), bp.y),
                               tensor_elementary(dp.elementary(), x_H(Dp.support())), budget);
  c["children"] = json::array({vi.certificate, vii.certificate});
  if (vii.is_no()) {
    c["reason"] = "(ii) fails: M_y (x) A is not isomorphic to M_{x_T'} (x) A'";
    return verdict(Tri::kNo, c);
  }
  if (vi.is_yes() && vii.is_yes()) {
    c["reason"] = "(i) and (ii) hold";
    return verdict(Tri::kYes, c);
  }
  c["reason"] = vi.is_unknown() ? "(i) undecided within budget" : "(ii) undecided within budget";
  return verdict(Tri::kUnknown, c);
}

Verdict brauer_equiv(const DivisionClass& D, const DivisionClass& Dp, const K0Descriptor& k, const Budget& budget) {
  GLIM_CHECK(D.group() == Dp.group() && D.group() == k.G, "classes and realization over different groups");
  GLIM_CHECK(D.is_nondegenerate() && Dp.is_nondegenerate(), "division classes must be central simple");
  json c = make_cert("brauer_equiv", Tri::kUnknown, "");
  const BrauerProduct bp = brauer_mul(D, Dp);
  c["E"] = to_json(bp.E);
  c["descriptor"] = k.source;
  if (bp.E.is_trivial()) {
    c["reason"] = "E is trivial";
    return verdict(Tri::kYes, c);
  }
  const auto& G = k.G;
  for (int t : bp.E.support().indices())
    for (int j : k.S)
      if (G.char_exp(G.orbits()[j].representative, t) != 0) {
        c["reason"] = "E is not contained in S^perp";
        c["t"] = G.elem(t).c;
        c["orbit"] = j;
        return verdict(Tri::kNo, c);
      }
  Verdict s = scaling_invertible(k, GroupRingElem::scalar(G, bp.E.support().size()), budget);
  c["children"] = json::array({s.certificate});
  c["reason"] = s.is_yes() ? "E ⊆ S^perp and |E| K+ = K+" : s.is_no() ? "|E| K+ != K+" : "|E|-invertibility undecided";
  return verdict(s.value, c);
}

}  // namespace glim
