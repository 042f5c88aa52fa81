#include "glim/groupring.hpp"

#include <algorithm>
#include <sstream>

#include "linalg.hpp"

namespace glim {

GroupRingElem::GroupRingElem(FinAbGroup G) : G_(std::move(G)), c_(G_.order(), 0) {}

GroupRingElem GroupRingElem::scalar(const FinAbGroup& G, const Rational& q) {
  GroupRingElem z(G);
  z.c_[0] = q;
  return z;
}

GroupRingElem GroupRingElem::basis(const FinAbGroup& G, const GroupElem& g, const Rational& c) {
  GroupRingElem z(G);
  z.c_[G.index(g)] = c;
  return z;
}

void GroupRingElem::set(int idx, const Rational& q) { c_.at(idx) = q; }
void GroupRingElem::add(int idx, const Rational& q) { c_.at(idx) += q; }

bool GroupRingElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool GroupRingElem::is_integer() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool GroupRingElem::is_nonneg_integer() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1 && q >= 0; });
}

Rational GroupRingElem::size() const {
  Rational s = 0;
  for (const auto& q : c_) s += q;
  return s;
}

void GroupRingElem::check_same(const GroupRingElem& o) const {
  GLIM_CHECK(G_ == o.G_, "group ring elements over different groups: " + G_.to_string() + " vs " +
                             o.G_.to_string());
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
  check_same(o);
  GroupRingElem r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
  check_same(o);
  GroupRingElem r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
  check_same(o);
  GroupRingElem r(G_);
  const int N = G_.order();
  for (int a = 0; a < N; ++a) {
    if (c_[a] == 0) continue;
    for (int b = 0; b < N; ++b)
      if (o.c_[b] != 0) r.c_[G_.mul_index(a, b)] += c_[a] * o.c_[b];
  }
  return r;
}

GroupRingElem GroupRingElem::operator*(const Rational& q) const {
  GroupRingElem r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

GroupRingElem GroupRingElem::bar() const {
  GroupRingElem r(G_);
  for (int a = 0; a < G_.order(); ++a) r.c_[G_.inv_index(a)] = c_[a];
  return r;
}

GroupRingElem GroupRingElem::shift(int g) const {
  GroupRingElem r(G_);
  for (int a = 0; a < G_.order(); ++a) r.c_[G_.mul_index(a, g)] = c_[a];
  return r;
}

GroupRingElem GroupRingElem::pow(int k) const {
  GLIM_CHECK(k >= 0, "negative power");
  GroupRingElem r = one(G_), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string GroupRingElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a < G_.order(); ++a) {
    if (c_[a] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[a] << "*" << G_.elem(a).to_string();
  }
  if (first) os << "0";
  return os.str();
}

GroupRingElem x_H(const Subgroup& H) {
  GroupRingElem z(H.parent());
  for (int idx : H.indices()) z.set(idx, 1);
  return z;
}

CycNum char_eval(const GroupRingElem& z, int chi) {
  const auto& G = z.group();
  const int n = G.exponent();
  std::vector<Rational> bucket(n, 0);
  for (int g = 0; g < G.order(); ++g)
    if (z.coeff(g) != 0) bucket[G.char_exp(chi, g)] += z.coeff(g);
  auto f = CyclotomicField::get(n);
  std::vector<Rational> acc(f->degree(), 0);
  for (int e = 0; e < n; ++e) {
    if (bucket[e] == 0) continue;
    const auto& p = f->zeta_power(e);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) acc[i] += bucket[e] * p[i];
  }
  return CycNum(f, std::move(acc));
}

std::vector<int> all_orbits(const FinAbGroup& G) {
  std::vector<int> s(G.orbits().size());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = static_cast<int>(j);
  return s;
}

std::vector<int> supp_orbits(const GroupRingElem& z) {
  const auto& G = z.group();
  std::vector<int> s;
  for (int j = 0; j < static_cast<int>(G.orbits().size()); ++j)
    if (!char_eval(z, G.orbits()[j].representative).is_zero()) s.push_back(j);
  return s;
}

GroupRingElem idempotent_e_j(const FinAbGroup& G, int j) {
  const auto& orbit = G.orbits().at(j);
  const int n = G.exponent();
  GroupRingElem z(G);
  for (int g = 0; g < G.order(); ++g) {
    CycNum s(n);
    for (int chi : orbit.members) s += CycNum::zeta(n, -G.char_exp(chi, g));
    z.set(g, s.to_rational() / G.order());
  }
  return z;
}

ProjCoords ProjCoords::constant(const FinAbGroup& G, const std::vector<int>& S, const Rational& q) {
  return ProjCoords{G, S, std::vector<CycNum>(S.size(), CycNum(G.exponent(), q))};
}

bool ProjCoords::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const CycNum& x) { return x.is_zero(); });
}

bool ProjCoords::is_unit() const {
  return std::none_of(values.begin(), values.end(), [](const CycNum& x) { return x.is_zero(); });
}

std::optional<CycNum> ProjCoords::at(int j) const {
  auto it = std::lower_bound(S.begin(), S.end(), j);
  if (it == S.end() || *it != j) return std::nullopt;
  return values[it - S.begin()];
}

namespace {
void check_compatible(const ProjCoords& a, const ProjCoords& b) {
  GLIM_CHECK(a.G == b.G && a.S == b.S, "coordinate vectors over different orbit sets");
}
}  // namespace

ProjCoords ProjCoords::operator*(const ProjCoords& o) const {
  check_compatible(*this, o);
  ProjCoords r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] = values[i] * o.values[i];
  return r;
}

ProjCoords ProjCoords::operator+(const ProjCoords& o) const {
  check_compatible(*this, o);
  ProjCoords r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
  return r;
}

ProjCoords ProjCoords::operator-(const ProjCoords& o) const {
  check_compatible(*this, o);
  ProjCoords r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
  return r;
}

ProjCoords ProjCoords::operator*(const Rational& q) const {
  ProjCoords r = *this;
  for (auto& v : r.values) v = v * q;
  return r;
}

ProjCoords ProjCoords::inverse() const {
  ProjCoords r = *this;
  for (auto& v : r.values) v = v.inverse();
  return r;
}

bool ProjCoords::operator==(const ProjCoords& o) const {
  return G == o.G && S == o.S && values == o.values;
}

ProjCoords ProjCoords::restrict(const std::vector<int>& sub) const {
  ProjCoords r{G, sub, {}};
  for (int j : sub) {
    auto v = at(j);
    GLIM_CHECK(v.has_value(), "restrict: orbit outside the coordinate set");
    r.values.push_back(*v);
  }
  return r;
}

std::string ProjCoords::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < S.size(); ++i) os << (i ? ", " : "") << "j" << S[i] << ": " << values[i].to_string();
  os << "]";
  return os.str();
}

ProjCoords proj_coords(const GroupRingElem& z, const std::vector<int>& S) {
  const auto& G = z.group();
  ProjCoords p{G, S, {}};
  p.values.reserve(S.size());
  for (int j : S) p.values.push_back(char_eval(z, G.orbits().at(j).representative));
  return p;
}

std::vector<ProjCoords> proj_coords_batch_serial(const std::vector<GroupRingElem>& zs, const std::vector<int>& S) {
  std::vector<ProjCoords> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.push_back(proj_coords(z, S));
  return out;
}

std::vector<ProjCoords> proj_coords_batch(const std::vector<GroupRingElem>& zs, const std::vector<int>& S) {
  if (zs.empty()) return {};
  std::vector<std::optional<ProjCoords>> tmp(zs.size());
  const long count = static_cast<long>(zs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) tmp[i] = proj_coords(zs[i], S);
  std::vector<ProjCoords> out;
  out.reserve(zs.size());
  for (auto& t : tmp) out.push_back(std::move(*t));
  return out;
}

namespace {

// Stacked power-basis coordinates of pi_S(g) for every group element.
linalg::QMat coordinate_matrix(const FinAbGroup& G, const std::vector<int>& S) {
  const int n = G.exponent();
  auto f = CyclotomicField::get(n);
  const std::size_t deg = f->degree();
  linalg::QMat M(G.order(), std::vector<Rational>(S.size() * deg, 0));
  for (int g = 0; g < G.order(); ++g)
    for (std::size_t k = 0; k < S.size(); ++k) {
      const auto& p = f->zeta_power(G.char_exp(G.orbits().at(S[k]).representative, g));
      for (std::size_t i = 0; i < deg; ++i) M[g][k * deg + i] = p[i];
    }
  return M;
}

std::vector<Rational> stacked(const ProjCoords& t) {
  std::vector<Rational> v;
  for (const auto& x : t.values) {
    GLIM_CHECK(x.conductor() == t.G.exponent(), "coordinate conductor differs from the group exponent");
    v.insert(v.end(), x.coeffs().begin(), x.coeffs().end());
  }
  return v;
}

}  // namespace

std::optional<GroupRingElem> lattice_witness(const ProjCoords& target) {
  const auto& G = target.G;
  auto t = stacked(target);
  std::vector<Integer> ti(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].get_den() != 1) return std::nullopt;  // generators are integral
    ti[i] = t[i].get_num();
  }
  auto Mq = coordinate_matrix(G, target.S);
  linalg::ZMat M(Mq.size());
  for (std::size_t r = 0; r < Mq.size(); ++r)
    for (const auto& q : Mq[r]) M[r].push_back(q.get_num());
  auto v = linalg::integer_row_combination(M, ti);
  if (!v) return std::nullopt;
  GroupRingElem z(G);
  for (int g = 0; g < G.order(); ++g) z.set(g, Rational((*v)[g]));
  GLIM_ASSERT(proj_coords(z, target.S) == target, "lattice witness does not reproduce the target");
  return z;
}

bool lattice_member(const ProjCoords& target) { return lattice_witness(target).has_value(); }

namespace {

struct Node {
  std::vector<Integer> lo;
  std::vector<std::optional<Integer>> hi;
};

// Floor/ceil of a rational.
Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::optional<GroupRingElem> cone_witness(const ProjCoords& target, long node_limit) {
  const auto& G = target.G;
  const int N = G.order();
  // Without the trivial orbit, adding x_G changes nothing, so the cone is the lattice.
  if (target.S.empty() || target.S.front() != 0) {
    auto z = lattice_witness(target);
    if (!z) return std::nullopt;
    Rational shift = 0;
    for (int g = 0; g < N; ++g) shift = std::min(shift, z->coeff(g));
    GroupRingElem w = *z + x_H(Subgroup::whole(G)) * Rational(-shift);
    GLIM_ASSERT(proj_coords(w, target.S) == target, "cone witness shift broke the target");
    return w;
  }
  if (!lattice_member(target)) return std::nullopt;
  auto Mq = coordinate_matrix(G, target.S);
  auto t = stacked(target);
  // equality system A v = t with A = M^T
  linalg::QMat A(t.size(), std::vector<Rational>(N));
  for (int g = 0; g < N; ++g)
    for (std::size_t r = 0; r < t.size(); ++r) A[r][g] = Mq[g][r];
  auto sys = linalg::independent_system(A, t);
  if (!sys) return std::nullopt;
  const auto& [Ar, tr] = *sys;

  std::vector<Node> stack;
  stack.push_back(Node{std::vector<Integer>(N, 0), std::vector<std::optional<Integer>>(N)});
  long nodes = 0;
  while (!stack.empty()) {
    if (++nodes > node_limit)
      throw SearchBudgetExceeded("cone membership search exceeded " + std::to_string(node_limit) + " nodes");
    Node nd = std::move(stack.back());
    stack.pop_back();
    // variables w = v - lo >= 0, slack per finite upper bound
    std::vector<int> bounded;
    for (int g = 0; g < N; ++g)
      if (nd.hi[g]) bounded.push_back(g);
    const std::size_t cols = N + bounded.size();
    linalg::QMat L;
    std::vector<Rational> rhs;
    for (std::size_t r = 0; r < Ar.size(); ++r) {
      std::vector<Rational> row(cols, 0);
      Rational b = tr[r];
      for (int g = 0; g < N; ++g) {
        row[g] = Ar[r][g];
        b -= Ar[r][g] * nd.lo[g];
      }
      L.push_back(std::move(row));
      rhs.push_back(b);
    }
    bool empty_box = false;
    for (std::size_t k = 0; k < bounded.size() && !empty_box; ++k) {
      const int g = bounded[k];
      Integer cap = *nd.hi[g] - nd.lo[g];
      if (cap < 0) {
        empty_box = true;
        break;
      }
      std::vector<Rational> row(cols, 0);
      row[g] = 1;
      row[N + k] = 1;
      L.push_back(std::move(row));
      rhs.push_back(Rational(cap));
    }
    if (!empty_box) {
      auto x = linalg::lp_vertex(L, rhs);
      if (!x) continue;
      int frac = -1;
      for (int g = 0; g < N; ++g)
        if ((*x)[g].get_den() != 1) {
          frac = g;
          break;
        }
      if (frac < 0) {
        GroupRingElem z(G);
        for (int g = 0; g < N; ++g) z.set(g, (*x)[g] + Rational(nd.lo[g]));
        GLIM_ASSERT(proj_coords(z, target.S) == target, "cone witness does not reproduce the target");
        return z;
      }
      Rational val = (*x)[frac] + Rational(nd.lo[frac]);
      Integer fl = floor_q(val);
      Node up = nd, down = nd;
      up.lo[frac] = fl + 1;
      down.hi[frac] = fl;
      stack.push_back(std::move(up));
      stack.push_back(std::move(down));
    }
  }
  return std::nullopt;
}

bool cone_member(const ProjCoords& target, long node_limit) { return cone_witness(target, node_limit).has_value(); }

}  // namespace glim
