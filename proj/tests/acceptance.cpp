// Acceptance run: one PASS/FAIL line per criterion, with wall time.
// Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "glim/error.hpp"
#include "glim/limits.hpp"
#include "glim/oracle.hpp"
#include "glim/serialize.hpp"

using namespace glim;

namespace {

// Failure notes of the running criterion.
std::ostringstream notes;

bool expect(bool cond, const std::string& what) {
  if (!cond) notes << "  " << what << "\n";
  return cond;
}

GroupRingElem num(const FinAbGroup& G, int k) { return GroupRingElem::scalar(G, k); }

DivisionClass pauli(const FinAbGroup& klein) {
  return DivisionClass::from_generators(klein, {{{1, 0}}, {{0, 1}}}, {{0, 1}, {1, 0}}, 2);
}

bool certified(const Verdict& v, const std::string& what) {
  std::string why;
  return expect(verify_certificate(v.certificate, &why), what + ": certificate rejected (" + why + ")");
}

bool verdict_is(const Verdict& v, Tri want, const std::string& what) {
  bool ok = expect(v.value == want, what + ": got " + to_string(v.value) + ", want " + to_string(want) + " (" +
                                        v.certificate.value("reason", "") + ")");
  return certified(v, what) && ok;
}

Rational trivial_coord(const ProjCoords& z) { return z.values.front().to_rational(); }

// 1. A (x) Q ≅ A for x0 = a = x_T over Klein; Q (x) Q ≅ M_{x_T} by structure constants.
bool example_absorption() {
  const FinAbGroup G({2, 2});
  const GroupRingElem xT = x_H(Subgroup::whole(G));
  const LimitDescriptor A(xT, {}, {xT});
  const DivisionClass Q = pauli(G);
  bool ok = verdict_is(absorbs(A, Q), Tri::kYes, "absorbs(A', Pauli)");
  const AlgebraPtr q = build_twisted(Q);
  const AlgebraPtr qq = tensor(q, q);
  const WedderburnInvariant inv = graded_simple_decompose(*qq);
  ok &= expect(inv.E.is_trivial(), "Q (x) Q has a nontrivial division part");
  ok &= expect(inv.coset_multiset == canonical_coset_multiset(xT, Subgroup::trivial(G)),
               "Q (x) Q grading is not x_T: " + inv.to_string());
  ok &= expect(graded_iso_finite(*qq, *build_matrix(xT)), "Q (x) Q is not isomorphic to M_{x_T}");
  return ok;
}

// 2. D (x) D^op = M_{x_T} for the Pauli class, with the 16-dim product checked by the oracle.
bool pauli_times_op() {
  const FinAbGroup G({2, 2});
  const DivisionClass P = pauli(G);
  const DivisionClass Pop = op_class(P);
  const std::vector<int> want = canonical_coset_multiset(x_H(Subgroup::whole(G)), Subgroup::trivial(G));
  bool ok = true;
  for (const auto& [name, bp] : {std::pair{"brauer_tensor(P, op P)", brauer_tensor(P, Pop)},
                                 std::pair{"brauer_mul(P, P)", brauer_mul(P, P)}}) {
    ok &= expect(bp.E.is_trivial(), std::string(name) + ": E is not trivial");
    ok &= expect(canonical_coset_multiset(bp.y, bp.E.support()) == want,
                 std::string(name) + ": y = " + bp.y.to_string());
  }
  const AlgebraPtr prod = tensor(build_twisted(P), opposite(build_twisted(P)));
  ok &= expect(prod->dim() == 16, "tensor product is not 16-dimensional");
  const WedderburnInvariant inv = graded_simple_decompose(*prod);
  ok &= expect(inv.E.is_trivial() && inv.coset_multiset == want, "oracle: " + inv.to_string());
  return ok;
}

// 3. A = M_2^{(x)inf} (x) Pauli and A' = M_{x_T}^{(x)inf} over Klein.
bool example_k0_not_complete() {
  const FinAbGroup G({2, 2});
  const GroupRingElem xT = x_H(Subgroup::whole(G));
  const LimitDescriptor A(num(G, 2), {}, {num(G, 2)});
  const LimitDescriptor Ap(xT, {}, {xT});
  const K0Descriptor kA = k0_realization(A), kAp = k0_realization(Ap);
  bool ok = expect(kA.S == all_orbits(G), "S(A) is not every orbit");
  ok &= expect(kAp.S == std::vector<int>{0}, "S(A') is not the trivial orbit");
  ok &= verdict_is(scaling_invertible(kA, num(G, 2)), Tri::kYes, "2 K+ = K+ for A");
  ok &= verdict_is(scaling_invertible(kAp, num(G, 2)), Tri::kYes, "2 K+ = K+ for A'");
  ok &= expect(trivial_coord(kA.order_unit) == 2, "order unit of A");
  ok &= expect(trivial_coord(kAp.order_unit) == 4, "order unit of A'");
  ok &= verdict_is(iso_elementary(A, Ap), Tri::kNo, "iso_elementary(A, A')");
  LimitDescriptor AD = A;
  AD.division = pauli(G);
  ok &= verdict_is(iso_general(AD, Ap), Tri::kNo, "iso_general(A (x) Pauli, A')");
  const LimitDescriptor q = quotient_pushforward(A, Subgroup::whole(G));
  const K0Descriptor kq = k0_realization(q), kAD = k0_realization(AD);
  ok &= expect(q.G.order() == 1 && trivial_coord(kq.order_unit) == 2, "pushforward order unit");
  ok &= expect(trivial_coord(kAD.order_unit) == 2, "order unit of A (x) Pauli");
  // both groups are (Z[1/2], Z[1/2]>=0); A' has order unit 4 = 2 * 2, a unit multiple
  for (int k = 0; k <= 3; ++k) {
    const Rational z(1, 1 << k);
    ok &= verdict_is(member_K_plus(kAD, ProjCoords::constant(kAD.G, kAD.S, z)), Tri::kYes, "2^-k in K+(A (x) D)");
    ok &= verdict_is(member_K_plus(kAp, ProjCoords::constant(kAp.G, kAp.S, z)), Tri::kYes, "2^-k in K+(A')");
  }
  ok &= verdict_is(member_K(kAD, ProjCoords::constant(kAD.G, kAD.S, Rational(1, 3))), Tri::kNo, "1/3 in K(A (x) D)");
  return ok;
}

GroupRingElem random_label(const FinAbGroup& G, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 2);
  GroupRingElem x(G);
  while (x.is_zero())
    for (int g = 0; g < G.order(); ++g) x.set(g, d(rng));
  return x;
}

// 4. |T| K+ = K+ with T ⊆ S^perp against x_T K+ = K+ on random descriptors.
bool absorption_criteria_agree() {
  std::mt19937 rng(20261014);
  const std::vector<FinAbGroup> groups{FinAbGroup({2, 2}), FinAbGroup({4})};
  int both = 0, yes = 0;
  bool ok = true;
  for (int trial = 0; trial < 50; ++trial) {
    const FinAbGroup& G = groups[trial % 2];
    const auto classes = all_division_classes(G);
    const DivisionClass& D = classes[std::uniform_int_distribution<std::size_t>(0, classes.size() - 1)(rng)];
    std::vector<GroupRingElem> prefix, cycle;
    for (int i = std::uniform_int_distribution<int>(0, 1)(rng); i > 0; --i) prefix.push_back(random_label(G, rng));
    for (int i = std::uniform_int_distribution<int>(1, 2)(rng); i > 0; --i) cycle.push_back(random_label(G, rng));
    const LimitDescriptor d(random_label(G, rng), prefix, cycle);
    const Verdict u = absorbs(d, D), v = absorbs_via_xT(d, D);
    if (u.is_unknown() || v.is_unknown()) continue;
    ++both;
    yes += u.is_yes();
    ok &= certified(u, "absorbs") && certified(v, "absorbs_via_xT");
    ok &= expect(u.value == v.value, "trial " + std::to_string(trial) + ": " + to_string(u.value) + " vs " +
                                         to_string(v.value) + " on " + to_json(d).dump() + " with " + D.to_string());
    if (u.is_yes()) {
      LimitDescriptor dD = d;
      dD.division = D;
      const Verdict w = iso_general(dD, d);
      ok &= expect(!w.is_no(), "trial " + std::to_string(trial) + ": absorbs but A (x) D is certified non-isomorphic");
      if (!w.is_unknown()) ok &= certified(w, "iso_general");
    }
  }
  std::printf("  %d of 50 pairs certified, %d absorbing\n", both, yes);
  return expect(both > 0, "no trial reached certified verdicts") && ok;
}

// 5. brauer_mul against the oracle on every pair of classes, groups of order <= 16.
bool oracle_equivalence() {
  bool ok = true;
  long pairs = 0;
  for (const auto& G : abelian_groups_up_to(16)) {
    const auto checks = validate_pairs(all_division_classes(G));
    for (const auto& c : checks) ok &= expect(c.ok, G.to_string() + " pair " + std::to_string(c.i) + "," +
                                                        std::to_string(c.j) + ": " + c.detail);
    pairs += static_cast<long>(checks.size());
  }
  std::printf("  %ld pairs\n", pairs);
  return ok;
}

std::vector<LimitDescriptor> load_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(GLIM_CORPUS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<LimitDescriptor> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    const json j = json::parse(in);
    if (!j.contains("x0")) continue;  // division class files
    try {
      out.push_back(descriptor_from_json(j));
    } catch (const Error&) {
      // deliberately invalid inputs
    }
  }
  return out;
}

// 6. Structural invariants, then K0 invariants and cancellation on the corpus.
bool invariant_suites() {
  bool ok = true;
  for (const auto& G : abelian_groups_up_to(16)) {
    const int m = static_cast<int>(G.orbits().size());
    GroupRingElem sum(G);
    for (int j = 0; j < m; ++j) {
      const GroupRingElem ej = idempotent_e_j(G, j);
      sum += ej;
      ok &= expect(ej * ej == ej, G.to_string() + ": e_j not idempotent");
      for (int k = j + 1; k < m; ++k)
        ok &= expect((ej * idempotent_e_j(G, k)).is_zero(), G.to_string() + ": e_j e_k != 0");
    }
    ok &= expect(sum == GroupRingElem::one(G), G.to_string() + ": idempotents do not sum to 1");
    for (const auto& T : all_subgroups(G))
      ok &= expect(perp(perp(T)) == T, G.to_string() + ": perp perp T != T for " + T.to_string());
  }
  std::mt19937 rng(11);
  for (const auto& G : abelian_groups_up_to(16))
    for (int s = 0; s < 8; ++s) {
      std::uniform_int_distribution<int> d(-2, 2);
      GroupRingElem z(G);
      for (int g = 0; g < G.order(); ++g) z.set(g, d(rng));
      ok &= expect(supp_orbits(z.bar()) == supp_orbits(z), G.to_string() + ": supp(zbar) != supp(z)");
    }

  const auto corpus = load_corpus();
  ok &= expect(corpus.size() >= 8, "corpus has fewer than 8 descriptors");
  Budget budget;
  budget.periods = 8;
  for (const auto& d : corpus) {
    const std::string name = to_json(d).dump();
    const K0Descriptor k = k0_realization(d);
    for (const auto& a : standard_form(d.elementary()).cycle)
      ok &= expect(supp_orbits(a.bar()) == supp_orbits(a), name + ": supp(abar) != supp(a)");
    // z = pi_S(w) / b_i lies in K+_i, and then in K+_j for j >= i and in K
    for (long i = 0; i <= 3; ++i) {
      const ProjCoords z = proj_coords(random_label(k.G, rng), k.S) / k.b(i);
      const Verdict plus = member_K_plus(k, z, budget), lat = member_K(k, z, budget);
      ok &= verdict_is(plus, Tri::kYes, name + ": pi_S(w)/b_i in K+") && verdict_is(lat, Tri::kYes, name + ": in K");
      if (plus.is_yes()) ok &= expect(plus.certificate.at("index").get<long>() <= i, name + ": index above i");
      const ProjCoords neg = z * ProjCoords::constant(k.G, k.S, -1);
      ok &= verdict_is(member_K_plus(k, neg, budget), Tri::kNo, name + ": -z in K+");
    }
  }
  int compared = 0;
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (!(a.G == b.G)) continue;
      const LimitDescriptor ea = a.elementary(), eb = b.elementary();
      const Verdict v = iso_elementary(ea, eb);
      for (int n : {2, 3}) {
        const Verdict w = iso_elementary(tensor_elementary(ea, num(a.G, n)), tensor_elementary(eb, num(a.G, n)));
        if (v.is_unknown() || w.is_unknown()) continue;
        ++compared;
        ok &= expect(v.value == w.value, "cancellation by M_" + std::to_string(n) + " on " + to_json(ea).dump() +
                                             " vs " + to_json(eb).dump());
      }
    }
  std::printf("  %zu corpus descriptors, %d cancellation comparisons\n", corpus.size(), compared);
  return ok;
}

// 7. Over the trivial group: 2^inf vs 3^inf and 2^inf vs 4^inf.
bool ungraded_uhf() {
  const FinAbGroup G({1});
  Budget budget;
  budget.periods = 4;
  budget.search_bound = 4;
  auto uhf = [&](int n) { return LimitDescriptor(num(G, 1), {}, {num(G, n)}); };
  bool ok = verdict_is(iso_elementary(uhf(2), uhf(3), budget), Tri::kNo, "2^inf vs 3^inf");
  ok &= verdict_is(iso_elementary(uhf(2), uhf(4), budget), Tri::kYes, "2^inf vs 4^inf");
  ok &= verdict_is(iso_elementary(uhf(6), uhf(12), budget), Tri::kYes, "6^inf vs 12^inf");
  ok &= verdict_is(iso_elementary(uhf(6), uhf(36), budget), Tri::kYes, "6^inf vs 36^inf");
  ok &= verdict_is(iso_elementary(uhf(6), uhf(10), budget), Tri::kNo, "6^inf vs 10^inf");
  return ok;
}

struct Criterion {
  const char* name;
  double limit_s;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"absorption of the Pauli class by M_{x_T}^(x)inf", 1, example_absorption},
      {"D (x) D^op is a graded matrix algebra", 1, pauli_times_op},
      {"isomorphic K0 without isomorphic limits", 5, example_k0_not_complete},
      {"two absorption criteria agree on random descriptors", 60, absorption_criteria_agree},
      {"brauer_mul matches the oracle on groups of order <= 16", 300, oracle_equivalence},
      {"invariant suites on the regression corpus", 60, invariant_suites},
      {"ungraded UHF classification", 1, ungraded_uhf},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    notes.str("");
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      notes << "  exception: " << e.what() << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      notes << "  took " << secs << " s, limit " << c.limit_s << " s\n";
      ok = false;
    }
    std::printf("%s %zu: %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, c.name, secs);
    if (!ok) std::cout << notes.str();
    std::fflush(stdout);
    failures += !ok;
  }
  return failures;
}
