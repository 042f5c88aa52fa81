// glim: command-line front end for the limit classification engine.
//
// Exit codes: 0 yes / success, 1 no, 2 error, 3 unknown.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "glim/error.hpp"
#include "glim/limits.hpp"
#include "glim/oracle.hpp"
#include "glim/serialize.hpp"

using namespace glim;

namespace {

constexpr int kExitYes = 0, kExitNo = 1, kExitError = 2, kExitUnknown = 3;

json read_json(const std::string& path) {
  std::ifstream in(path);
  GLIM_CHECK(in.good(), "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

LimitDescriptor read_descriptor(const std::string& path) {
  try {
    return descriptor_from_json(read_json(path));
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw Error(path + ": " + msg);
  }
}

// {"group": [...], "division": {...}}, or the bare division object over G.
DivisionClass read_division(const std::string& path, const FinAbGroup* G) {
  json j = read_json(path);
  try {
    std::optional<FinAbGroup> own;
    if (j.contains("group")) own = FinAbGroup(j.at("group").get<std::vector<int>>());
    GLIM_CHECK(own || G, "division file needs a group key");
    const FinAbGroup& g = own ? *own : *G;
    if (G) GLIM_CHECK(g == *G, "division class is over a different group");
    const json& d = j.contains("division") ? j.at("division") : j;
    if (d.is_object() && d.contains("support_gens") && d.at("support_gens").empty()) return DivisionClass::trivial(g);
    return division_from_json(g, d);
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

json orbit_list(const FinAbGroup& G, const std::vector<int>& S) {
  json out = json::array();
  for (int j : S) {
    const auto& o = G.orbits()[j];
    out.push_back({{"orbit", j}, {"representative", G.elem(o.representative).c}, {"size", o.field_degree()}});
  }
  return out;
}

int exit_for(Tri t) { return t == Tri::kYes ? kExitYes : t == Tri::kNo ? kExitNo : kExitUnknown; }

void emit(const json& j, bool text, const std::string& summary) {
  if (text)
    std::cout << summary << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

int report(const Verdict& v, bool text) {
  json out{{"verdict", to_string(v.value)}, {"certificate", v.certificate}};
  emit(out, text, to_string(v.value) + ": " + v.certificate.value("reason", ""));
  return exit_for(v.value);
}

// Replays a stored verdict: witnesses rechecked, then recomputed with the same inputs.
int replay(const std::string& path, const Verdict& fresh, bool text) {
  json stored = read_json(path);
  const json& cert = stored.contains("certificate") ? stored.at("certificate") : stored;
  std::string why;
  bool ok = verify_certificate(cert, &why);
  if (ok && cert.value("verdict", "") != to_string(fresh.value)) {
    ok = false;
    why = "recomputed verdict is " + to_string(fresh.value);
  }
  json out{{"valid", ok}, {"verdict", cert.value("verdict", "")}};
  if (!ok) out["reason"] = why;
  emit(out, text, ok ? "certificate valid" : "certificate invalid: " + why);
  return ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of direct limits of graded matrix algebras"};
  app.require_subcommand(1);
  bool text = false;
  Budget budget;
  auto add_output = [&](CLI::App* c) {
    auto* j = c->add_flag("--json", "JSON output (default)");
    c->add_flag("--text", text, "human-readable output")->excludes(j);
  };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", budget.periods, "unrolled cycle periods")->capture_default_str()->check(CLI::PositiveNumber);
    c->add_option("--budget-primes", budget.primes, "prime invariants up to this bound")->capture_default_str();
    c->add_option("--search-bound", budget.search_bound, "candidate scalings in the isomorphism search")
        ->capture_default_str();
    c->add_option("--node-limit", budget.node_limit, "branch-and-bound nodes per cone query")->capture_default_str();
  };

  std::string file_a, file_b, division_file, cert_file, limit_file;
  auto* sf = app.add_subcommand("standard-form", "canonical standard form with S and S0");
  sf->add_option("file", file_a)->required();
  add_output(sf);

  auto* iso = app.add_subcommand("iso", "decide whether two limits are isomorphic");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();
  iso->add_option("--check-certificate", cert_file, "replay a stored verdict instead of printing one");
  add_budget(iso);
  add_output(iso);

  auto* ab = app.add_subcommand("absorbs", "decide A (x) D ≅ A");
  ab->add_option("file", file_a)->required();
  ab->add_option("--division", division_file, "division class file")->required();
  ab->add_option("--check-certificate", cert_file, "replay a stored verdict");
  add_budget(ab);
  add_output(ab);

  auto* br = app.add_subcommand("brauer", "graded Brauer arithmetic");
  std::string br_op;
  std::vector<std::string> br_files;
  br->add_option("op", br_op, "mul | inv | equiv")->required()->check(CLI::IsMember({"mul", "inv", "equiv"}));
  br->add_option("files", br_files, "division class files")->required();
  br->add_option("--limit", limit_file, "limit descriptor for equiv");
  add_budget(br);
  add_output(br);

  auto* oc = app.add_subcommand("oracle-check", "cross-validate Brauer products against the structure-constant oracle");
  int max_order = 16;
  oc->add_option("--max-group-order", max_order, "largest group order")->capture_default_str();
  add_output(oc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*sf) {
      const LimitDescriptor d = read_descriptor(file_a);
      const LimitDescriptor s = standard_form(d);
      const SupportSets ss = compute_S_S0(d);
      json out{{"descriptor", to_json(s)}, {"S", orbit_list(d.G, ss.S)}, {"S0", orbit_list(d.G, ss.S0)}};
      emit(out, text, "S: " + std::to_string(ss.S.size()) + " orbits, S0: " + std::to_string(ss.S0.size()) + " orbits");
      return kExitYes;
    }
    if (*iso) {
      const LimitDescriptor a = read_descriptor(file_a), b = read_descriptor(file_b);
      GLIM_CHECK(a.G == b.G, "descriptors are graded by different groups");
      const bool general = (a.division && !a.division->is_trivial()) || (b.division && !b.division->is_trivial());
      const Verdict v = general ? iso_general(a, b, budget) : iso_elementary(a, b, budget);
      return cert_file.empty() ? report(v, text) : replay(cert_file, v, text);
    }
    if (*ab) {
      const LimitDescriptor a = read_descriptor(file_a);
      const DivisionClass D = read_division(division_file, &a.G);
      const Verdict v = absorbs(a, D, budget);
      return cert_file.empty() ? report(v, text) : replay(cert_file, v, text);
    }
    if (*br) {
      if (br_op == "inv") {
        GLIM_CHECK(br_files.size() == 1, "brauer inv takes one class");
        const DivisionClass D = read_division(br_files[0], nullptr);
        const DivisionClass O = op_class(D);
        emit(json{{"group", O.group().factors()}, {"division", to_json(O)}}, text, O.to_string());
        return kExitYes;
      }
      GLIM_CHECK(br_files.size() == 2, "brauer " + br_op + " takes two classes");
      const DivisionClass D = read_division(br_files[0], nullptr);
      const DivisionClass Dp = read_division(br_files[1], &D.group());
      if (br_op == "mul") {
        const ValidatedProduct vp = brauer_mul_validated(D, Dp);
        json out{{"E", to_json(vp.product.E)}, {"y", to_json(vp.product.y)}, {"oracle_agrees", vp.oracle_agrees}};
        emit(out, text, "E: " + vp.product.E.to_string() + "  y: " + vp.product.y.to_string());
        return kExitYes;
      }
      GLIM_CHECK(!limit_file.empty(), "brauer equiv needs --limit");
      const LimitDescriptor a = read_descriptor(limit_file);
      GLIM_CHECK(a.G == D.group(), "limit and classes over different groups");
      return report(brauer_equiv(D, Dp, k0_realization(a), budget), text);
    }
    if (*oc) {
      json groups = json::array();
      bool all_ok = true;
      for (const auto& G : abelian_groups_up_to(max_order)) {
        const auto classes = all_division_classes(G);
        const auto checks = validate_pairs(classes);
        long bad = 0;
        json failures = json::array();
        for (const auto& c : checks)
          if (!c.ok) {
            ++bad;
            if (failures.size() < 5) failures.push_back({{"i", c.i}, {"j", c.j}, {"detail", c.detail}});
          }
        all_ok = all_ok && bad == 0;
        groups.push_back({{"group", G.factors()},
                          {"classes", classes.size()},
                          {"nontrivial_classes", classes.size() - 1},
                          {"pairs", checks.size()},
                          {"failures", bad},
                          {"examples", failures}});
      }
      std::ostringstream os;
      os << (all_ok ? "pass" : "FAIL") << ": " << groups.size() << " groups";
      emit(json{{"pass", all_ok}, {"groups", groups}}, text, os.str());
      return all_ok ? kExitYes : kExitNo;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
