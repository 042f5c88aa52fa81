#include "glim/abelian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "glim/error.hpp"

namespace glim {

namespace {

constexpr int kMulTableLimit = 512;

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string GroupElem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

FinAbGroup::FinAbGroup(std::vector<int> factors) {
  GLIM_CHECK(!factors.empty(), "group needs at least one cyclic factor");
  auto d = std::make_shared<Data>();
  for (int f : factors) {
    GLIM_CHECK(f >= 1, "cyclic factors must be positive");
    d->order *= f;
    d->exponent = std::lcm(d->exponent, f);
  }
  d->factors = std::move(factors);
  const int N = d->order;
  const int k = static_cast<int>(d->factors.size());
  d->elems.reserve(N);
  for (int idx = 0; idx < N; ++idx) {
    GroupElem g{std::vector<int>(k)};
    int r = idx;
    for (int i = k; i-- > 0;) {
      g.c[i] = r % d->factors[i];
      r /= d->factors[i];
    }
    d->elems.push_back(std::move(g));
  }
  d_ = d;
  d->inv.resize(N);
  for (int a = 0; a < N; ++a) d->inv[a] = index(inv(d->elems[a]));
  if (N <= kMulTableLimit) {
    d->mul.resize(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) d->mul[a * N + b] = index(mul(d->elems[a], d->elems[b]));
  }
  // Galois orbits of characters under chi -> chi^k, gcd(k, n) = 1.
  d->orbit_of.assign(N, -1);
  const int n = d->exponent;
  for (int chi = 0; chi < N; ++chi) {
    if (d->orbit_of[chi] >= 0) continue;
    std::set<int> mem;
    for (int u = 1; u <= n; ++u)
      if (std::gcd(u, n) == 1) mem.insert(index(pow(d->elems[chi], u)));
    CharOrbit o;
    o.members.assign(mem.begin(), mem.end());
    o.representative = o.members.front();
    for (int m : o.members) d->orbit_of[m] = static_cast<int>(d->orbits.size());
    d->orbits.push_back(std::move(o));
  }
}

GroupElem FinAbGroup::make(const std::vector<long>& coords) const {
  GLIM_CHECK(static_cast<int>(coords.size()) == rank(),
             "element has " + std::to_string(coords.size()) + " coordinates, group rank is " +
                 std::to_string(rank()));
  GroupElem g{std::vector<int>(rank())};
  for (int i = 0; i < rank(); ++i) g.c[i] = static_cast<int>(mod(coords[i], factors()[i]));
  return g;
}

bool FinAbGroup::is_member(const GroupElem& g) const {
  if (static_cast<int>(g.c.size()) != rank()) return false;
  for (int i = 0; i < rank(); ++i)
    if (g.c[i] < 0 || g.c[i] >= factors()[i]) return false;
  return true;
}

void FinAbGroup::check_member(const GroupElem& g) const {
  GLIM_CHECK(is_member(g), "element " + g.to_string() + " does not belong to " + to_string());
}

GroupElem FinAbGroup::mul(const GroupElem& a, const GroupElem& b) const {
  check_member(a);
  check_member(b);
  GroupElem r{std::vector<int>(rank())};
  for (int i = 0; i < rank(); ++i) r.c[i] = (a.c[i] + b.c[i]) % factors()[i];
  return r;
}

GroupElem FinAbGroup::inv(const GroupElem& a) const {
  check_member(a);
  GroupElem r{std::vector<int>(rank())};
  for (int i = 0; i < rank(); ++i) r.c[i] = static_cast<int>(mod(-a.c[i], factors()[i]));
  return r;
}

GroupElem FinAbGroup::pow(const GroupElem& a, long k) const {
  check_member(a);
  GroupElem r{std::vector<int>(rank())};
  for (int i = 0; i < rank(); ++i) r.c[i] = static_cast<int>(mod(a.c[i] * (k % factors()[i]), factors()[i]));
  return r;
}

int FinAbGroup::elem_order(const GroupElem& a) const {
  check_member(a);
  int o = 1;
  for (int i = 0; i < rank(); ++i) o = std::lcm(o, factors()[i] / std::gcd(a.c[i], factors()[i]));
  return o;
}

int FinAbGroup::index(const GroupElem& g) const {
  check_member(g);
  int idx = 0;
  for (int i = 0; i < rank(); ++i) idx = idx * factors()[i] + g.c[i];
  return idx;
}

int FinAbGroup::mul_index(int a, int b) const {
  if (!d_->mul.empty()) return d_->mul[static_cast<std::size_t>(a) * order() + b];
  return index(mul(d_->elems[a], d_->elems[b]));
}

int FinAbGroup::char_exp(int chi, int g) const {
  return char_exp(d_->elems[chi], d_->elems[g]);
}

int FinAbGroup::char_exp(const Character& chi, const GroupElem& g) const {
  const int n = exponent();
  long e = 0;
  for (int i = 0; i < rank(); ++i) e += static_cast<long>(n / factors()[i]) * chi.c[i] * g.c[i];
  return static_cast<int>(mod(e, n));
}

std::string FinAbGroup::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rank(); ++i) os << (i ? "x" : "") << "Z" << factors()[i];
  return os.str();
}

Subgroup::Subgroup(FinAbGroup G, const std::vector<GroupElem>& gens) : G_(std::move(G)), gens_(gens) {
  std::vector<char> in(G_.order(), 0);
  std::vector<int> frontier{0};
  in[0] = 1;
  std::vector<int> gidx;
  for (const auto& g : gens) gidx.push_back(G_.index(g));
  while (!frontier.empty()) {
    int a = frontier.back();
    frontier.pop_back();
    for (int g : gidx) {
      int b = G_.mul_index(a, g);
      if (!in[b]) {
        in[b] = 1;
        frontier.push_back(b);
      }
    }
  }
  for (int i = 0; i < G_.order(); ++i)
    if (in[i]) elems_.push_back(i);
}

Subgroup Subgroup::whole(const FinAbGroup& G) {
  std::vector<GroupElem> gens;
  for (int i = 0; i < G.rank(); ++i) {
    GroupElem g = G.identity();
    g.c[i] = G.factors()[i] > 1 ? 1 : 0;
    gens.push_back(g);
  }
  return Subgroup(G, gens);
}

Subgroup Subgroup::from_indices(const FinAbGroup& G, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<GroupElem> gens;
  for (int i : idx) gens.push_back(G.elem(i));
  Subgroup s(G, gens);
  GLIM_CHECK(s.elems_ == idx, "element set is not a subgroup");
  return s;
}

std::vector<GroupElem> Subgroup::elements() const {
  std::vector<GroupElem> r;
  for (int i : elems_) r.push_back(G_.elem(i));
  return r;
}

bool Subgroup::contains(int idx) const { return std::binary_search(elems_.begin(), elems_.end(), idx); }

bool Subgroup::subset_of(const Subgroup& o) const {
  return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end());
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) os << (i ? "," : "") << G_.elem(elems_[i]).to_string();
  os << "}";
  return os.str();
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<GroupElem> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Subgroup(a.parent(), gens);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> r;
  std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                        std::back_inserter(r));
  return Subgroup::from_indices(a.parent(), r);
}

namespace {

using Mat = std::vector<std::vector<long long>>;

// Smith normal form P R Q = D; returns the diagonal and Q (column transform).
std::pair<std::vector<long long>, Mat> smith(Mat R, int cols) {
  const int rows = static_cast<int>(R.size());
  Mat Q(cols, std::vector<long long>(cols, 0));
  for (int i = 0; i < cols; ++i) Q[i][i] = 1;
  auto col_op = [&](int dst, int src, long long f) {  // col dst -= f * col src
    for (int r = 0; r < rows; ++r) R[r][dst] -= f * R[r][src];
    for (int r = 0; r < cols; ++r) Q[r][dst] -= f * Q[r][src];
  };
  auto col_swap = [&](int a, int b) {
    for (int r = 0; r < rows; ++r) std::swap(R[r][a], R[r][b]);
    for (int r = 0; r < cols; ++r) std::swap(Q[r][a], Q[r][b]);
  };
  auto row_op = [&](int dst, int src, long long f) {
    for (int c = 0; c < cols; ++c) R[dst][c] -= f * R[src][c];
  };
  const int lim = std::min(rows, cols);
  for (int t = 0; t < lim; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (R[r][c] != 0 && (pr < 0 || std::llabs(R[r][c]) < std::llabs(R[pr][pc]))) pr = r, pc = c;
      if (pr < 0) break;
      std::swap(R[t], R[pr]);
      col_swap(t, pc);
      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        long long q = R[r][t] / R[t][t];
        row_op(r, t, q);
        if (R[r][t] != 0) clean = false;
      }
      for (int c = t + 1; c < cols; ++c) {
        long long q = R[t][c] / R[t][t];
        col_op(c, t, q);
        if (R[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int r = t + 1; r < rows && bad < 0; ++r)
        for (int c = t + 1; c < cols; ++c)
          if (R[r][c] % R[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, -1);
    }
  }
  std::vector<long long> diag(cols, 0);
  for (int t = 0; t < lim; ++t) diag[t] = std::llabs(R[t][t]);
  return {diag, Q};
}

}  // namespace

Quotient quotient(const FinAbGroup& G, const Subgroup& T) {
  GLIM_CHECK(T.parent() == G, "subgroup belongs to a different group");
  const int k = G.rank();
  Mat R;
  for (int idx : T.indices()) {
    if (idx == 0) continue;
    const auto& g = G.elem(idx);
    R.emplace_back(g.c.begin(), g.c.end());
  }
  for (int i = 0; i < k; ++i) {
    std::vector<long long> row(k, 0);
    row[i] = G.factors()[i];
    R.push_back(row);
  }
  auto [diag, Q] = smith(R, k);
  std::vector<int> keep, qf;
  for (int i = 0; i < k; ++i) {
    GLIM_ASSERT(diag[i] > 0, "quotient: relation matrix not of full rank");
    if (diag[i] > 1) {
      keep.push_back(i);
      qf.push_back(static_cast<int>(diag[i]));
    }
  }
  if (qf.empty()) qf.push_back(1);
  Quotient out{FinAbGroup(qf), std::vector<int>(G.order())};
  for (int idx = 0; idx < G.order(); ++idx) {
    const auto& g = G.elem(idx);
    std::vector<long> v(out.Q.rank(), 0);
    for (std::size_t j = 0; j < keep.size(); ++j) {
      long long s = 0;
      for (int i = 0; i < k; ++i) s += g.c[i] * Q[i][keep[j]];
      v[j] = static_cast<long>(s % diag[keep[j]]);
    }
    out.proj[idx] = out.Q.index(out.Q.make(v));
  }
  // kernel must be exactly T
  for (int idx = 0; idx < G.order(); ++idx)
    GLIM_ASSERT((out.proj[idx] == 0) == T.contains(idx), "quotient map kernel mismatch");
  return out;
}

Subgroup perp(const Subgroup& T) {
  const auto& G = T.parent();
  std::vector<int> r;
  for (int chi = 0; chi < G.order(); ++chi) {
    bool ok = true;
    for (int t : T.indices())
      if (G.char_exp(chi, t) != 0) {
        ok = false;
        break;
      }
    if (ok) r.push_back(chi);
  }
  return Subgroup::from_indices(G, r);
}

Subgroup perp_orbits(const FinAbGroup& G, const std::vector<int>& S) {
  std::vector<int> r;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int j : S) {
      for (int chi : G.orbits().at(j).members)
        if (G.char_exp(chi, g) != 0) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) r.push_back(g);
  }
  return Subgroup::from_indices(G, r);
}

std::vector<int> orbits_in(const FinAbGroup& G, const Subgroup& X) {
  std::vector<int> r;
  for (int j = 0; j < static_cast<int>(G.orbits().size()); ++j) {
    const auto& m = G.orbits()[j].members;
    if (std::all_of(m.begin(), m.end(), [&](int c) { return X.contains(c); })) r.push_back(j);
  }
  return r;
}

std::vector<GroupElem> independent_basis(const Subgroup& T) {
  const auto& G = T.parent();
  std::vector<int> cand;
  for (int idx : T.indices())
    if (idx != 0) cand.push_back(idx);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return G.elem_order(G.elem(a)) > G.elem_order(G.elem(b)); });
  std::vector<GroupElem> chosen;
  std::function<bool(const Subgroup&, int)> dfs = [&](const Subgroup& span, int max_ord) -> bool {
    if (span.size() == T.size()) return true;
    for (int idx : cand) {
      const GroupElem g = G.elem(idx);
      const int o = G.elem_order(g);
      if (o > max_ord || span.contains(idx)) continue;
      std::vector<GroupElem> gens = chosen;
      gens.push_back(g);
      Subgroup next(G, gens);
      if (next.size() != span.size() * o) continue;
      chosen.push_back(g);
      if (dfs(next, o)) return true;
      chosen.pop_back();
    }
    return false;
  };
  GLIM_ASSERT(dfs(Subgroup::trivial(G), G.exponent()), "independent_basis: no decomposition found");
  return chosen;
}

std::vector<FinAbGroup> abelian_groups_up_to(int max_order) {
  std::vector<FinAbGroup> out;
  if (max_order >= 1) out.emplace_back(std::vector<int>{1});
  // invariant factors d1 | d2 | ... | dk, d1 > 1
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& cur, int prod, int last) {
    for (int d = last; prod * d <= max_order; d += last) {
      cur.push_back(d);
      out.emplace_back(cur);
      rec(cur, prod * d, d);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  for (int d1 = 2; d1 <= max_order; ++d1) {
    cur = {d1};
    out.emplace_back(cur);
    rec(cur, d1, d1);
  }
  std::stable_sort(out.begin(), out.end(), [](const FinAbGroup& a, const FinAbGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.factors() < b.factors();
  });
  return out;
}

std::vector<Subgroup> all_subgroups(const FinAbGroup& G) {
  std::map<std::vector<int>, Subgroup> seen;
  std::vector<Subgroup> todo{Subgroup::trivial(G)};
  seen.emplace(todo[0].indices(), todo[0]);
  while (!todo.empty()) {
    Subgroup H = todo.back();
    todo.pop_back();
    for (int g = 1; g < G.order(); ++g) {
      if (H.contains(g)) continue;
      auto gens = H.generators();
      gens.push_back(G.elem(g));
      Subgroup K(G, gens);
      if (seen.emplace(K.indices(), K).second) todo.push_back(K);
    }
  }
  std::vector<Subgroup> out;
  for (auto& [k, v] : seen) out.push_back(v);
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

}  // namespace glim
