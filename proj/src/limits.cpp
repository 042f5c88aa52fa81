#include "glim/limits.hpp"

#include <algorithm>
#include <numeric>

#include "glim/error.hpp"
#include "glim/serialize.hpp"
#include "limits_internal.hpp"

namespace glim {

namespace detail {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

json make_cert(const std::string& kind, Tri v, const std::string& reason) {
  return {{"kind", kind}, {"verdict", to_string(v)}, {"reason", reason}};
}

Verdict verdict(Tri v, json cert) {
  cert["verdict"] = to_string(v);
  return Verdict{v, std::move(cert)};
}

GroupRingElem label_product(const LimitDescriptor& d, long from, long to, bool barred) {
  GroupRingElem p = GroupRingElem::one(d.G);
  for (long i = from; i <= to; ++i) p = p * (barred ? d.label(i).bar() : d.label(i));
  return p;
}

Rational norm_at(const CycNum& x, int L) { return x.conductor() == L ? x.norm() : x.lift(L).norm(); }

std::optional<std::pair<int, unsigned long>> norm_obstruction(const ProjCoords& z, const std::vector<ProjCoords>& pre,
                                                              const std::vector<ProjCoords>& cyc) {
  for (std::size_t r = 0; r < z.values.size(); ++r) {
    const CycNum& zr = z.values[r];
    if (zr.is_zero()) continue;
    int L = zr.conductor();
    for (const auto& v : pre) L = std::lcm(L, v.values[r].conductor());
    for (const auto& v : cyc) L = std::lcm(L, v.values[r].conductor());
    const Rational nz = norm_at(zr, L);
    if (nz.get_den() == 1) continue;
    for (unsigned long p : prime_factors(nz.get_den())) {
      long vc = 0, vp = padic_valuation(nz, p);
      for (const auto& v : cyc) vc += padic_valuation(norm_at(v.values[r], L), p);
      if (vc != 0) continue;
      for (const auto& v : pre) vp += padic_valuation(norm_at(v.values[r], L), p);
      if (vp < 0) return std::make_pair(static_cast<int>(r), p);
    }
  }
  return std::nullopt;
}

}  // namespace detail

using namespace detail;

std::string to_string(Tri t) {
  switch (t) {
    case Tri::kYes:
      return "yes";
    case Tri::kNo:
      return "no";
    case Tri::kUnknown:
      return "unknown";
  }
  return "unknown";
}

LimitDescriptor::LimitDescriptor(GroupRingElem x0_, std::vector<GroupRingElem> prefix_,
                                 std::vector<GroupRingElem> cycle_, std::optional<DivisionClass> division_)
    : G(x0_.group()), x0(std::move(x0_)), prefix(std::move(prefix_)), cycle(std::move(cycle_)),
      division(std::move(division_)) {
  validate();
}

void LimitDescriptor::validate() const {
  auto check = [&](const GroupRingElem& a, const std::string& what) {
    GLIM_CHECK(a.group() == G, what + ": label over a different group");
    GLIM_CHECK(!a.is_zero(), what + ": label must be nonzero");
    GLIM_CHECK(a.is_nonneg_integer(), what + ": label must have nonnegative integer coefficients");
  };
  check(x0, "x0");
  for (std::size_t i = 0; i < prefix.size(); ++i) check(prefix[i], "prefix label " + std::to_string(i));
  GLIM_CHECK(!cycle.empty(), "cycle must be nonempty");
  for (std::size_t i = 0; i < cycle.size(); ++i) check(cycle[i], "cycle label " + std::to_string(i));
  if (division) GLIM_CHECK(division->group() == G, "division class over a different group");
}

const GroupRingElem& LimitDescriptor::label(long i) const {
  GLIM_ASSERT(i >= 1, "labels are indexed from 1");
  if (i <= prefix_length()) return prefix[i - 1];
  return cycle[(i - prefix_length() - 1) % period()];
}

LimitDescriptor LimitDescriptor::elementary() const {
  LimitDescriptor d = *this;
  d.division.reset();
  return d;
}

bool LimitDescriptor::operator==(const LimitDescriptor& o) const {
  if (!(G == o.G && x0 == o.x0 && prefix == o.prefix && cycle == o.cycle)) return false;
  const bool a = division && !division->is_trivial();
  const bool b = o.division && !o.division->is_trivial();
  if (a != b) return false;
  return !a || *division == *o.division;
}

ProjCoords K0Descriptor::b(long i) const {
  ProjCoords p = ProjCoords::constant(G, S, 1);
  for (long k = 1; k <= i; ++k)
    p = p * (k <= prefix_length() ? denom_prefix[k - 1] : denom_cycle[(k - prefix_length() - 1) % period()]);
  return p;
}

ProjCoords K0Descriptor::cycle_product() const {
  ProjCoords p = ProjCoords::constant(G, S, 1);
  for (const auto& c : denom_cycle) p = p * c;
  return p;
}

Subgroup perp_of(const FinAbGroup& G, const std::vector<int>& S) { return perp_orbits(G, S); }

LimitDescriptor standard_form(const LimitDescriptor& d) {
  d.validate();
  std::vector<int> S = all_orbits(d.G);
  std::vector<std::vector<int>> csupp;
  for (const auto& c : d.cycle) {
    csupp.push_back(supp_orbits(c));
    S = intersect_sorted(S, csupp.back());
  }
  // absorb leading labels until supp(x0) ⊆ S; one full period always suffices
  GroupRingElem x = d.x0;
  long absorbed = 0;
  while (!is_subset(supp_orbits(x), S)) {
    ++absorbed;
    GLIM_ASSERT(absorbed <= d.prefix_length() + d.period(), "standard form: support never shrank into S");
    x = x * d.label(absorbed);
  }
  const long P = std::max(d.prefix_length(), absorbed);
  LimitDescriptor out(d.G);
  out.division = d.division;
  out.x0 = x;
  for (long i = absorbed + 1; i <= P; ++i) out.prefix.push_back(d.label(i));
  for (long i = P + 1; i <= P + d.period(); ++i) out.cycle.push_back(d.label(i));
  bool cycle_ok = true;
  for (const auto& c : out.cycle) cycle_ok = cycle_ok && supp_orbits(c) == S;
  if (!cycle_ok) {
    GroupRingElem prod = GroupRingElem::one(d.G);
    for (const auto& c : out.cycle) prod = prod * c;
    out.cycle = {prod};
  }
  bool prefix_ok = true;
  for (const auto& a : out.prefix) prefix_ok = prefix_ok && supp_orbits(a) == S;
  if (!prefix_ok) {
    for (const auto& a : out.prefix) out.x0 = out.x0 * a;
    out.prefix.clear();
  }
  GLIM_ASSERT(is_subset(supp_orbits(out.x0), S), "standard form: supp(x0) escaped S");
  return out;
}

SupportSets compute_S_S0(const LimitDescriptor& d) {
  const LimitDescriptor sf = standard_form(d);
  SupportSets r;
  r.S = supp_orbits(sf.cycle.front());
  r.S0 = supp_orbits(sf.x0);
  return r;
}

LimitDescriptor tensor_elementary(const LimitDescriptor& d, const GroupRingElem& c) {
  GLIM_CHECK(c.group() == d.G, "tensor factor over a different group");
  GLIM_CHECK(!c.is_zero() && c.is_nonneg_integer(), "tensor factor must be a nonzero nonnegative integer element");
  LimitDescriptor out = d;
  out.x0 = c * d.x0;
  return out;
}

LimitDescriptor quotient_pushforward(const LimitDescriptor& d, const Subgroup& T) {
  GLIM_CHECK(T.parent() == d.G, "subgroup of a different group");
  const Quotient q = quotient(d.G, T);
  auto push = [&](const GroupRingElem& a) {
    GroupRingElem r(q.Q);
    for (int g = 0; g < d.G.order(); ++g)
      if (a.coeff(g) != 0) r.add(q.proj[g], a.coeff(g));
    return r;
  };
  LimitDescriptor out(q.Q);
  out.x0 = push(d.x0);
  for (const auto& a : d.prefix) out.prefix.push_back(push(a));
  for (const auto& a : d.cycle) out.cycle.push_back(push(a));
  return out;
}

K0Descriptor k0_realization(const LimitDescriptor& d) {
  if (d.division && !d.division->is_trivial()) return k0_realization(quotient_pushforward(d, d.division->support()));
  const LimitDescriptor sf = standard_form(d.elementary());
  K0Descriptor k;
  k.G = d.G;
  k.S = supp_orbits(sf.cycle.front());
  k.S0 = supp_orbits(sf.x0);
  k.order_unit = proj_coords(sf.x0.bar(), k.S);
  for (const auto& a : sf.prefix) k.denom_prefix.push_back(proj_coords(a.bar(), k.S));
  for (const auto& a : sf.cycle) k.denom_cycle.push_back(proj_coords(a.bar(), k.S));
  for (const auto& c : k.denom_prefix) GLIM_ASSERT(c.is_unit(), "denominator vanishes on S");
  for (const auto& c : k.denom_cycle) GLIM_ASSERT(c.is_unit(), "denominator vanishes on S");
  k.source = to_json(sf);
  return k;
}

namespace {

// Smallest i in [0, hi] with pred(i), given pred(hi) and monotonicity.
template <class Pred>
long first_true(long hi, Pred pred) {
  long lo = 0;
  while (lo < hi) {
    const long mid = lo + (hi - lo) / 2;
    if (pred(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

long max_index(const K0Descriptor& k, const Budget& b) {
  return std::max<long>(1, k.prefix_length() + static_cast<long>(b.periods) * k.period());
}

json membership_cert(const K0Descriptor& k, const ProjCoords& z, bool cone) {
  json c = make_cert(cone ? "member_K_plus" : "member_K", Tri::kUnknown, "");
  c["descriptor"] = k.source;
  c["z"] = to_json(z);
  return c;
}

void check_query(const K0Descriptor& k, const ProjCoords& z) {
  GLIM_CHECK(z.G == k.G && z.S == k.S, "query coordinates are not over the realization's S");
}

}  // namespace

Verdict member_K(const K0Descriptor& k, const ProjCoords& z, const Budget& budget) {
  check_query(k, z);
  json c = membership_cert(k, z, false);
  const long M = max_index(k, budget);
  auto witness_at = [&](long i) { return lattice_witness(z * k.b(i)); };
  if (auto w = witness_at(M)) {
    const long i = first_true(M, [&](long t) { return witness_at(t).has_value(); });
    auto wi = witness_at(i);
    GLIM_ASSERT(wi.has_value(), "lattice membership is not monotone");
    c["reason"] = "z * pi_S(b_i) is the image of an integer element";
    c["index"] = i;
    c["witness"] = to_json(*wi);
    return verdict(Tri::kYes, c);
  }
  if (auto ob = norm_obstruction(z, k.denom_prefix, k.denom_cycle)) {
    c["reason"] = "norm obstruction: prime " + std::to_string(ob->second) + " in the denominator at orbit " +
                  std::to_string(k.S[ob->first]) + " never cancels";
    c["orbit"] = k.S[ob->first];
    c["prime"] = ob->second;
    return verdict(Tri::kNo, c);
  }
  c["reason"] = "no integer witness up to index " + std::to_string(M);
  return verdict(Tri::kUnknown, c);
}

Verdict member_K_plus(const K0Descriptor& k, const ProjCoords& z, const Budget& budget) {
  check_query(k, z);
  json c = membership_cert(k, z, true);
  if (z.is_zero()) {
    c["reason"] = "zero";
    c["index"] = 0;
    c["witness"] = to_json(GroupRingElem(k.G));
    return verdict(Tri::kYes, c);
  }
  if (has_trivial(k.S)) {
    GLIM_ASSERT(z.values.front().is_rational(), "trivial-character coordinate is not rational");
    const Rational t = z.values.front().to_rational();
    if (t < 0) {
      c["reason"] = "negative trivial-character coordinate";
      return verdict(Tri::kNo, c);
    }
    if (t == 0) {
      c["reason"] = "trivial-character coordinate is zero but z is not";
      return verdict(Tri::kNo, c);
    }
  }
  const long M = max_index(k, budget);
  bool exhausted = false;
  auto witness_at = [&](long i) -> std::optional<GroupRingElem> {
    try {
      return cone_witness(z * k.b(i), budget.node_limit);
    } catch (const SearchBudgetExceeded&) {
      exhausted = true;
      return std::nullopt;
    }
  };
  if (auto w = witness_at(M)) {
    const long i = first_true(M, [&](long t) { return witness_at(t).has_value(); });
    auto wi = i == M ? w : witness_at(i);
    GLIM_ASSERT(wi.has_value(), "cone membership is not monotone");
    c["reason"] = "z * pi_S(b_i) is the image of a nonnegative element";
    c["index"] = i;
    c["witness"] = to_json(*wi);
    return verdict(Tri::kYes, c);
  }
  Verdict lat = member_K(k, z, budget);
  if (lat.is_no()) {
    c["reason"] = "z is not in K";
    c["children"] = json::array({lat.certificate});
    return verdict(Tri::kNo, c);
  }
  c["reason"] = exhausted ? "cone search node limit reached" : "no nonnegative witness up to index " + std::to_string(M);
  return verdict(Tri::kUnknown, c);
}

Verdict scaling_invertible(const K0Descriptor& k, const GroupRingElem& cval, const Budget& budget) {
  GLIM_CHECK(cval.group() == k.G, "scaling element over a different group");
  GLIM_CHECK(!cval.is_zero() && cval.is_nonneg_integer(), "scaling element must be a nonzero nonnegative integer element");
  json c = make_cert("scaling", Tri::kUnknown, "");
  c["descriptor"] = k.source;
  c["c"] = to_json(cval);
  const ProjCoords cb = proj_coords(cval.bar(), k.S);
  if (cb.is_zero()) {
    c["reason"] = "supp(c) does not meet S";
    return verdict(Tri::kNo, c);
  }
  for (std::size_t r = 0; r < cb.values.size(); ++r)
    if (cb.values[r].is_zero()) {
      c["reason"] = "supp(c) misses orbit " + std::to_string(k.S[r]) + " of S";
      c["orbit"] = k.S[r];
      return verdict(Tri::kNo, c);
    }
  const ProjCoords Q = k.cycle_product();
  const ProjCoords inv = cb.inverse();
  if (auto ob = norm_obstruction(inv, {}, {Q})) {
    c["reason"] = "norm obstruction: prime " + std::to_string(ob->second) + " divides N(c) at orbit " +
                  std::to_string(k.S[ob->first]) + " but not the cycle norm";
    c["orbit"] = k.S[ob->first];
    c["prime"] = ob->second;
    return verdict(Tri::kNo, c);
  }
  std::vector<ProjCoords> Qpow{ProjCoords::constant(k.G, k.S, 1)};
  for (int m = 1; m <= budget.periods; ++m) Qpow.push_back(Qpow.back() * Q);
  bool exhausted = false;
  auto witness_at = [&](long m) -> std::optional<GroupRingElem> {
    try {
      return cone_witness(Qpow[m] * inv, budget.node_limit);
    } catch (const SearchBudgetExceeded&) {
      exhausted = true;
      return std::nullopt;
    }
  };
  const long M = budget.periods;
  if (auto w = witness_at(M)) {
    long m = 0;
    std::optional<GroupRingElem> wm = witness_at(0);
    if (!wm) {
      m = first_true(M, [&](long t) { return witness_at(t).has_value(); });
      wm = witness_at(m);
    }
    GLIM_ASSERT(wm.has_value(), "scaling witness is not monotone");
    c["reason"] = "pi_S(Q^m) = pi_S(bar c) pi_S(w) with w nonnegative";
    c["m"] = m;
    c["witness"] = to_json(*wm);
    return verdict(Tri::kYes, c);
  }
  c["reason"] = exhausted ? "cone search node limit reached"
                          : "no nonnegative w with Q^m = bar(c) w for m <= " + std::to_string(M);
  return verdict(Tri::kUnknown, c);
}

namespace {

void check_absorb_input(const LimitDescriptor& d, const DivisionClass& D) {
  GLIM_CHECK(D.group() == d.G, "division class over a different group");
  GLIM_CHECK(D.is_nondegenerate(), "division class is degenerate (not central simple)");
  GLIM_CHECK(!d.division || d.division->is_trivial(), "absorption expects an elementary limit");
}

}  // namespace

Verdict absorbs(const LimitDescriptor& d, const DivisionClass& D, const Budget& budget) {
  check_absorb_input(d, D);
  json c = make_cert("absorbs", Tri::kUnknown, "");
  c["division"] = to_json(D);
  if (D.is_trivial()) {
    c["reason"] = "trivial division algebra";
    return verdict(Tri::kYes, c);
  }
  const K0Descriptor k = k0_realization(d);
  c["descriptor"] = k.source;
  const auto& G = d.G;
  for (int t : D.support().indices())
    for (int j : k.S)
      if (G.char_exp(G.orbits()[j].representative, t) != 0) {
        c["reason"] = "T is not contained in S^perp";
        c["t"] = G.elem(t).c;
        c["orbit"] = j;
        return verdict(Tri::kNo, c);
      }
  Verdict s = scaling_invertible(k, GroupRingElem::scalar(G, D.support().size()), budget);
  c["children"] = json::array({s.certificate});
  c["reason"] = s.is_yes() ? "T ⊆ S^perp and |T| K+ = K+" : s.is_no() ? "|T| K+ != K+" : "|T|-invertibility undecided";
  return verdict(s.value, c);
}

Verdict absorbs_via_xT(const LimitDescriptor& d, const DivisionClass& D, const Budget& budget) {
  check_absorb_input(d, D);
  json c = make_cert("absorbs_xT", Tri::kUnknown, "");
  c["division"] = to_json(D);
  const K0Descriptor k = k0_realization(d);
  Verdict s = scaling_invertible(k, x_H(D.support()), budget);
  c["children"] = json::array({s.certificate});
  c["reason"] = s.is_yes() ? "x_T K+ = K+" : s.is_no() ? "x_T K+ != K+" : "x_T-invertibility undecided";
  return verdict(s.value, c);
}

}  // namespace glim
