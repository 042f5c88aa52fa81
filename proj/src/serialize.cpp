#include "glim/serialize.hpp"

#include "glim/error.hpp"

namespace glim {

namespace {

Rational rational_from(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  GLIM_CHECK(j.is_string(), where + ": expected an integer or a rational string");
  Rational q;
  try {
    q = Rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw Error(where + ": malformed rational '" + j.get<std::string>() + "'");
  }
  q.canonicalize();
  return q;
}

json rational_to(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

GroupElem elem_from(const FinAbGroup& G, const json& j, const std::string& where) {
  GLIM_CHECK(j.is_array(), where + ": element must be a list of integers");
  GLIM_CHECK(static_cast<int>(j.size()) == G.rank(),
             where + ": element has " + std::to_string(j.size()) + " coordinates, group rank is " +
                 std::to_string(G.rank()));
  std::vector<long> c;
  for (const auto& v : j) {
    GLIM_CHECK(v.is_number_integer(), where + ": coordinates must be integers");
    c.push_back(v.get<long>());
  }
  return G.make(c);
}

json elem_to(const GroupElem& g) { return json(g.c); }

}  // namespace

json to_json(const CycNum& x) {
  json c = json::array();
  for (const auto& q : x.coeffs()) c.push_back(rational_to(q));
  return {{"n", x.conductor()}, {"c", c}};
}

CycNum cycnum_from_json(const json& j) {
  GLIM_CHECK(j.is_object() && j.contains("n") && j.contains("c"), "cyclotomic number must be {n, c}");
  const int n = j.at("n").get<int>();
  GLIM_CHECK(n >= 1, "cyclotomic conductor must be positive");
  auto F = CyclotomicField::get(n);
  GLIM_CHECK(static_cast<int>(j.at("c").size()) == F->degree(), "cyclotomic number has the wrong length");
  std::vector<Rational> c;
  for (const auto& v : j.at("c")) c.push_back(rational_from(v, "c"));
  return CycNum(F, std::move(c));
}

json to_json(const GroupRingElem& x) {
  json out = json::array();
  const auto& G = x.group();
  for (int g = 0; g < G.order(); ++g)
    if (x.coeff(g) != 0) out.push_back({{"elem", elem_to(G.elem(g))}, {"mult", rational_to(x.coeff(g))}});
  return out;
}

GroupRingElem group_ring_from_json(const FinAbGroup& G, const json& j, const std::string& where, bool labels_only) {
  GLIM_CHECK(j.is_array(), where + ": label must be a list of {elem, mult}");
  GroupRingElem x(G);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string at = where + "[" + std::to_string(t) + "]";
    const auto& term = j[t];
    GLIM_CHECK(term.is_object() && term.contains("elem") && term.contains("mult"),
               at + ": each term needs keys elem and mult");
    const GroupElem g = elem_from(G, term.at("elem"), at + ".elem");
    Rational m = rational_from(term.at("mult"), at + ".mult");
    if (labels_only) GLIM_CHECK(m.get_den() == 1 && m > 0, at + ".mult: multiplicity must be a positive integer");
    x.add(G.index(g), m);
  }
  if (labels_only) GLIM_CHECK(!x.is_zero(), where + ": label must be nonzero");
  return x;
}

json to_json(const ProjCoords& z) {
  json v = json::array();
  for (const auto& c : z.values) v.push_back(to_json(c));
  return {{"S", z.S}, {"values", v}};
}

ProjCoords proj_coords_from_json(const FinAbGroup& G, const json& j) {
  ProjCoords z{G, j.at("S").get<std::vector<int>>(), {}};
  for (const auto& v : j.at("values")) z.values.push_back(cycnum_from_json(v));
  GLIM_CHECK(z.values.size() == z.S.size(), "coordinates and orbit list differ in length");
  return z;
}

json to_json(const DivisionClass& D) {
  json gens = json::array();
  for (const auto& g : D.basis()) gens.push_back(elem_to(g));
  return {{"support_gens", gens}, {"beta", D.basis_matrix()}, {"zeta_order", D.zeta_order()}};
}

DivisionClass division_from_json(const FinAbGroup& G, const json& j, const std::string& where) {
  GLIM_CHECK(j.is_object(), where + ": must be an object");
  for (const char* key : {"support_gens", "beta", "zeta_order"})
    GLIM_CHECK(j.contains(key), where + ": missing key " + key);
  std::vector<GroupElem> gens;
  const auto& jg = j.at("support_gens");
  GLIM_CHECK(jg.is_array(), where + ".support_gens: must be a list");
  for (std::size_t i = 0; i < jg.size(); ++i)
    gens.push_back(elem_from(G, jg[i], where + ".support_gens[" + std::to_string(i) + "]"));
  const auto& jb = j.at("beta");
  GLIM_CHECK(jb.is_array() && jb.size() == gens.size(), where + ".beta: must be a square matrix matching support_gens");
  std::vector<std::vector<long>> M;
  for (std::size_t i = 0; i < jb.size(); ++i) {
    GLIM_CHECK(jb[i].is_array() && jb[i].size() == gens.size(),
               where + ".beta[" + std::to_string(i) + "]: row has the wrong length");
    std::vector<long> row;
    for (const auto& v : jb[i]) {
      GLIM_CHECK(v.is_number_integer(), where + ".beta: entries must be integers");
      row.push_back(v.get<long>());
    }
    M.push_back(std::move(row));
  }
  GLIM_CHECK(j.at("zeta_order").is_number_integer() && j.at("zeta_order").get<int>() > 0,
             where + ".zeta_order: must be a positive integer");
  try {
    return DivisionClass::from_generators(G, gens, M, j.at("zeta_order").get<int>());
  } catch (const Error& e) {
    throw Error(where + ": " + e.what());
  }
}

json to_json(const LimitDescriptor& d) {
  json j;
  j["group"] = d.G.factors();
  j["x0"] = to_json(d.x0);
  j["prefix_labels"] = json::array();
  for (const auto& a : d.prefix) j["prefix_labels"].push_back(to_json(a));
  j["cycle_labels"] = json::array();
  for (const auto& a : d.cycle) j["cycle_labels"].push_back(to_json(a));
  if (d.division && !d.division->is_trivial()) j["division"] = to_json(*d.division);
  return j;
}

LimitDescriptor descriptor_from_json(const json& j) {
  GLIM_CHECK(j.is_object(), "descriptor must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& k = it.key();
    GLIM_CHECK(k == "group" || k == "x0" || k == "prefix_labels" || k == "cycle_labels" || k == "division",
               "unknown key " + k);
  }
  GLIM_CHECK(j.contains("group"), "missing key group");
  const auto& jg = j.at("group");
  GLIM_CHECK(jg.is_array(), "group: must be a list of cyclic factor orders");
  std::vector<int> factors;
  for (const auto& v : jg) {
    GLIM_CHECK(v.is_number_integer() && v.get<long>() >= 1, "group: factor orders must be positive integers");
    factors.push_back(v.get<int>());
  }
  if (factors.empty()) factors.push_back(1);
  FinAbGroup G(factors);
  GLIM_CHECK(j.contains("x0"), "missing key x0");
  GLIM_CHECK(j.contains("cycle_labels"), "missing key cycle_labels");
  LimitDescriptor d(G);
  d.x0 = group_ring_from_json(G, j.at("x0"), "x0", true);
  if (j.contains("prefix_labels")) {
    const auto& p = j.at("prefix_labels");
    GLIM_CHECK(p.is_array(), "prefix_labels: must be a list of labels");
    for (std::size_t i = 0; i < p.size(); ++i)
      d.prefix.push_back(group_ring_from_json(G, p[i], "prefix_labels[" + std::to_string(i) + "]", true));
  }
  const auto& c = j.at("cycle_labels");
  GLIM_CHECK(c.is_array() && !c.empty(), "cycle_labels: must be a nonempty list of labels");
  for (std::size_t i = 0; i < c.size(); ++i)
    d.cycle.push_back(group_ring_from_json(G, c[i], "cycle_labels[" + std::to_string(i) + "]", true));
  if (j.contains("division")) d.division = division_from_json(G, j.at("division"));
  d.validate();
  return d;
}

}  // namespace glim
