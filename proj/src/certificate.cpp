// Witness replay.  No search happens here: every check is a finite
// computation on the data stored in the certificate.

#include <functional>

#include "glim/error.hpp"
#include "glim/limits.hpp"
#include "glim/serialize.hpp"
#include "limits_internal.hpp"

namespace glim {

using namespace detail;

namespace {

struct Fail {
  std::string why;
};

void require(bool cond, const std::string& why) {
  if (!cond) throw Fail{why};
}

K0Descriptor k0_of(const json& cert, const char* key = "descriptor") {
  require(cert.contains(key), std::string("missing ") + key);
  return k0_realization(descriptor_from_json(cert.at(key)));
}

bool verdict_is(const json& cert, const char* v) { return cert.value("verdict", "") == v; }

void check(const json& cert);

void check_children(const json& cert) {
  if (!cert.contains("children")) return;
  for (const auto& ch : cert.at("children")) check(ch);
}

const json& child(const json& cert, std::size_t i) {
  require(cert.contains("children") && cert.at("children").size() > i, "missing child certificate");
  return cert.at("children")[i];
}

void check_membership(const json& cert, bool cone) {
  const K0Descriptor k = k0_of(cert);
  const ProjCoords z = proj_coords_from_json(k.G, cert.at("z"));
  require(z.S == k.S, "z is not over S");
  if (verdict_is(cert, "yes")) {
    const long i = cert.at("index").get<long>();
    const GroupRingElem w = group_ring_from_json(k.G, cert.at("witness"), "witness", false);
    require(cone ? w.is_nonneg_integer() : w.is_integer(), "witness has the wrong sign or is not integral");
    require(z * k.b(i) == proj_coords(w, k.S), "z * pi_S(b_i) != pi_S(witness)");
    return;
  }
  if (cert.contains("prime")) {
    auto ob = norm_obstruction(z, k.denom_prefix, k.denom_cycle);
    require(ob && k.S[ob->first] == cert.at("orbit").get<int>() && ob->second == cert.at("prime").get<unsigned long>(),
            "norm obstruction does not hold");
    return;
  }
  if (cert.contains("children")) {
    const json& ch = child(cert, 0);
    check(ch);
    require(verdict_is(ch, "no") && ch.at("z") == cert.at("z"), "child does not refute membership of z in K");
    return;
  }
  require(has_trivial(k.S), "sign certificate without the trivial orbit");
  const Rational t = z.values.front().to_rational();
  require(t < 0 || (t == 0 && !z.is_zero()), "trivial-character coordinate does not refute nonnegativity");
}

void check_scaling(const json& cert) {
  const K0Descriptor k = k0_of(cert);
  const GroupRingElem c = group_ring_from_json(k.G, cert.at("c"), "c", true);
  const ProjCoords cb = proj_coords(c.bar(), k.S);
  if (verdict_is(cert, "yes")) {
    const long m = cert.at("m").get<long>();
    const GroupRingElem w = group_ring_from_json(k.G, cert.at("witness"), "witness", false);
    require(w.is_nonneg_integer(), "scaling witness is not a nonnegative integer element");
    ProjCoords q = ProjCoords::constant(k.G, k.S, 1);
    for (long t = 0; t < m; ++t) q = q * k.cycle_product();
    require(q == cb * proj_coords(w, k.S), "pi_S(Q^m) != pi_S(bar c) pi_S(w)");
    return;
  }
  if (cert.contains("prime")) {
    auto ob = norm_obstruction(cb.inverse(), {}, {k.cycle_product()});
    require(ob && k.S[ob->first] == cert.at("orbit").get<int>() && ob->second == cert.at("prime").get<unsigned long>(),
            "norm obstruction does not hold");
    return;
  }
  if (cert.contains("orbit")) {
    const int j = cert.at("orbit").get<int>();
    auto v = cb.at(j);
    require(v && v->is_zero(), "bar c does not vanish on the named orbit");
    return;
  }
  require(cb.is_zero(), "bar c does not vanish on S");
}

void check_perp_failure(const json& cert, const DivisionClass& D, const K0Descriptor& k) {
  const auto& G = k.G;
  std::vector<long> tc = cert.at("t").get<std::vector<long>>();
  const int t = G.index(G.make(tc));
  const int j = cert.at("orbit").get<int>();
  require(D.support().contains(t), "t is not in the support");
  require(std::find(k.S.begin(), k.S.end(), j) != k.S.end(), "orbit is not in S");
  require(G.char_exp(G.orbits()[j].representative, t) != 0, "character is trivial on t");
}

void check_absorbs(const json& cert) {
  if (cert.value("reason", "") == "trivial division algebra") {
    require(cert.at("division").at("support_gens").empty(), "division algebra is not trivial");
    return;
  }
  const K0Descriptor k = k0_of(cert);
  if (cert.contains("t")) {
    check_perp_failure(cert, division_from_json(k.G, cert.at("division")), k);
    return;
  }
  const json& ch = child(cert, 0);
  check(ch);
  require(ch.at("verdict") == cert.at("verdict"), "verdict differs from the scaling check");
}

void check_iso_elementary(const json& cert) {
  const LimitDescriptor a = descriptor_from_json(cert.at("descriptor"));
  const LimitDescriptor b = descriptor_from_json(cert.at("descriptor_prime"));
  const std::string reason = cert.value("reason", "");
  if (reason == "identical standard forms") {
    require(verdict_is(cert, "yes") && standard_form(a) == standard_form(b), "standard forms differ");
    return;
  }
  const SupportSets sa = compute_S_S0(a), sb = compute_S_S0(b);
  if (reason == "S differs") {
    require(sa.S != sb.S, "S agrees");
    return;
  }
  if (reason == "S0 differs") {
    require(sa.S0 != sb.S0, "S0 agrees");
    return;
  }
  check_children(cert);
  if (cert.contains("prime")) {
    const json &u = child(cert, 0), &v = child(cert, 1);
    require((verdict_is(u, "yes") && verdict_is(v, "no")) || (verdict_is(u, "no") && verdict_is(v, "yes")),
            "prime invariant does not separate");
    const GroupRingElem p = GroupRingElem::scalar(a.G, cert.at("prime").get<int>());
    require(u.at("c") == to_json(p) && v.at("c") == to_json(p), "prime certificates test another element");
    require(u.at("descriptor") == to_json(standard_form(a)) && v.at("descriptor") == to_json(standard_form(b)),
            "prime certificates refer to other limits");
    return;
  }
  if (verdict_is(cert, "yes")) {
    require(sa.S == sb.S && sa.S0 == sb.S0, "S or S0 differ");
    const GroupRingElem bb = group_ring_from_json(a.G, cert.at("b"), "b", true);
    const GroupRingElem bp = group_ring_from_json(a.G, cert.at("b_prime"), "b_prime", true);
    require(supp_orbits(bb) == sa.S && supp_orbits(bp) == sa.S, "b or b' does not have support S");
    const LimitDescriptor fa = standard_form(a), fb = standard_form(b);
    require(bb * fa.x0.bar() == bp * fb.x0.bar(), "b x0bar != b' x0'bar");
    require(cert.at("children").size() == 4, "expected four condition certificates");
    for (const auto& ch : cert.at("children")) require(verdict_is(ch, "yes"), "a condition is not certified");
    // (a) and (a') must test the scaling b / b'
    const K0Descriptor ka = k0_realization(fa), kb = k0_realization(fb);
    const ProjCoords lambda = proj_coords(bb, sa.S) / proj_coords(bp, sa.S);
    require(proj_coords_from_json(a.G, child(cert, 0).at("z")) == lambda / ka.b(ka.prefix_length()),
            "(a) tests another element");
    require(proj_coords_from_json(a.G, child(cert, 1).at("z")) == lambda.inverse() / kb.b(kb.prefix_length()),
            "(a') tests another element");
    return;
  }
  bool any_no = false;
  for (const auto& ch : cert.at("children")) any_no = any_no || verdict_is(ch, "no");
  require(any_no, "no child refutes the isomorphism");
}

void check(const json& cert) {
  require(cert.is_object() && cert.contains("kind") && cert.contains("verdict"), "malformed certificate");
  if (verdict_is(cert, "unknown")) return;
  const std::string kind = cert.at("kind");
  if (kind == "member_K")
    check_membership(cert, false);
  else if (kind == "member_K_plus")
    check_membership(cert, true);
  else if (kind == "scaling")
    check_scaling(cert);
  else if (kind == "absorbs")
    check_absorbs(cert);
  else if (kind == "absorbs_xT") {
    const json& ch = child(cert, 0);
    check(ch);
    require(ch.at("verdict") == cert.at("verdict"), "verdict differs from the scaling check");
  } else if (kind == "iso_elementary")
    check_iso_elementary(cert);
  else if (kind == "iso_general") {
    check_children(cert);
    const auto& ch = cert.at("children");
    if (verdict_is(cert, "yes")) {
      require(ch.size() == 2 && verdict_is(ch[0], "yes") && verdict_is(ch[1], "yes"), "(i) or (ii) not certified");
    } else {
      bool any_no = false;
      for (const auto& c : ch) any_no = any_no || verdict_is(c, "no");
      require(any_no, "no condition is refuted");
    }
  } else if (kind == "brauer_equiv") {
    const K0Descriptor k = k0_of(cert);
    if (cert.value("reason", "") == "E is trivial") {
      require(cert.at("E").at("support_gens").empty(), "E is not trivial");
      return;
    }
    if (cert.contains("t")) {
      check_perp_failure(cert, division_from_json(k.G, cert.at("E"), "E"), k);
      return;
    }
    const json& ch = child(cert, 0);
    check(ch);
    require(ch.at("verdict") == cert.at("verdict"), "verdict differs from the scaling check");
  } else {
    throw Fail{"unknown certificate kind " + kind};
  }
}

}  // namespace

bool verify_certificate(const json& cert, std::string* why) {
  try {
    check(cert);
    return true;
  } catch (const Fail& f) {
    if (why) *why = f.why;
  } catch (const std::exception& e) {
    if (why) *why = std::string("replay error: ") + e.what();
  }
  return false;
}

}  // namespace glim
