#include "glim/divalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "glim/error.hpp"

namespace glim {

namespace {

int modn(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

DivisionClass::DivisionClass(Subgroup T, std::vector<int> table)
    : T_(std::move(T)), pos_(T_.parent().order(), -1), table_(std::move(table)) {
  for (int p = 0; p < T_.size(); ++p) pos_[T_.indices()[p]] = p;
  const int m = T_.size();
  GLIM_ASSERT(static_cast<int>(table_.size()) == m * m, "DivisionClass: table size");
}

DivisionClass DivisionClass::trivial(const FinAbGroup& G) { return DivisionClass(Subgroup::trivial(G), {0}); }

DivisionClass DivisionClass::from_generators(const FinAbGroup& G, const std::vector<GroupElem>& gens,
                                             const std::vector<std::vector<long>>& M, int zeta_order,
                                             bool require_nondegenerate) {
  const int n = G.exponent();
  const std::size_t r = gens.size();
  GLIM_CHECK(zeta_order >= 1, "zeta_order must be positive");
  GLIM_CHECK(M.size() == r, "beta matrix must be square of size equal to the number of support generators");
  for (const auto& g : gens) G.check_member(g);
  std::vector<std::vector<int>> e(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i) {
    GLIM_CHECK(M[i].size() == r, "beta matrix must be square");
    for (std::size_t j = 0; j < r; ++j) {
      const long num = M[i][j] * static_cast<long>(n);
      GLIM_CHECK(num % zeta_order == 0, "beta value zeta_" + std::to_string(zeta_order) + "^" +
                                            std::to_string(M[i][j]) + " is not an n-th root of unity, n = " +
                                            std::to_string(n));
      e[i][j] = modn(num / zeta_order, n);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    GLIM_CHECK(e[i][i] == 0, "beta is not alternating: beta(t,t) != 1");
    for (std::size_t j = 0; j < r; ++j)
      GLIM_CHECK(modn(e[i][j] + e[j][i], n) == 0, "beta is not alternating: beta(s,t) != beta(t,s)^-1");
  }
  Subgroup T(G, gens);
  std::vector<int> ord(r);
  for (std::size_t i = 0; i < r; ++i) {
    ord[i] = G.elem_order(gens[i]);
    for (std::size_t j = 0; j < r; ++j)
      GLIM_CHECK(static_cast<long>(ord[i]) * e[i][j] % n == 0,
                 "beta is not well defined: beta(t_i, .)^ord(t_i) != 1");
  }
  // For each element: one coefficient tuple and the row (beta(t, g_j))_j.
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> rep;
  std::vector<int> a(r, 0);
  for (;;) {
    std::vector<long> coords(G.rank(), 0);
    for (std::size_t i = 0; i < r; ++i)
      for (int k = 0; k < G.rank(); ++k) coords[k] += static_cast<long>(a[i]) * gens[i].c[k];
    const int idx = G.index(G.make(coords));
    std::vector<int> row(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      long s = 0;
      for (std::size_t i = 0; i < r; ++i) s += static_cast<long>(a[i]) * e[i][j];
      row[j] = modn(s, n);
    }
    auto it = rep.find(idx);
    if (it == rep.end())
      rep.emplace(idx, std::make_pair(a, row));
    else
      GLIM_CHECK(it->second.second == row, "beta is not well defined on the subgroup generated by the support gens");
    std::size_t i = 0;
    while (i < r && ++a[i] == ord[i]) a[i++] = 0;
    if (i == r) break;
  }
  const int m = T.size();
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      const auto& rowp = rep.at(T.indices()[p]).second;
      const auto& cq = rep.at(T.indices()[q]).first;
      long s = 0;
      for (std::size_t j = 0; j < r; ++j) s += static_cast<long>(cq[j]) * rowp[j];
      table[p * m + q] = modn(s, n);
    }
  DivisionClass D(T, std::move(table));
  if (require_nondegenerate) GLIM_CHECK(D.is_nondegenerate(), "division class is degenerate (beta has a nontrivial radical)");
  return D;
}

DivisionClass DivisionClass::from_table(const Subgroup& T, std::vector<int> table, bool require_nondegenerate) {
  const auto& G = T.parent();
  const int n = G.exponent();
  const int m = T.size();
  GLIM_CHECK(static_cast<int>(table.size()) == m * m, "beta table size mismatch");
  for (auto& x : table) x = modn(x, n);
  DivisionClass D(T, std::move(table));
  for (int s : T.indices()) {
    GLIM_CHECK(D.beta_exp(s, s) == 0, "beta is not alternating");
    for (int t : T.indices()) {
      GLIM_CHECK(modn(D.beta_exp(s, t) + D.beta_exp(t, s), n) == 0, "beta is not alternating");
      for (int u : T.indices())
        GLIM_CHECK(D.beta_exp(G.mul_index(s, t), u) == modn(D.beta_exp(s, u) + D.beta_exp(t, u), n),
                   "beta is not a bicharacter");
    }
  }
  if (require_nondegenerate) GLIM_CHECK(D.is_nondegenerate(), "division class is degenerate (beta has a nontrivial radical)");
  return D;
}

int DivisionClass::beta_exp(int s, int t) const {
  const int ps = pos_.at(s), pt = pos_.at(t);
  GLIM_CHECK(ps >= 0 && pt >= 0, "beta evaluated outside its support");
  return table_[static_cast<std::size_t>(ps) * T_.size() + pt];
}

std::vector<std::vector<long>> DivisionClass::basis_matrix() const {
  const auto b = basis();
  const auto& G = group();
  std::vector<std::vector<long>> M(b.size(), std::vector<long>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) M[i][j] = beta_exp(G.index(b[i]), G.index(b[j]));
  return M;
}

bool DivisionClass::is_nondegenerate() const { return radical(*this).size() == 1; }

std::string DivisionClass::to_string() const {
  std::ostringstream os;
  const auto b = basis();
  const auto M = basis_matrix();
  os << "T=<";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i].to_string();
  os << "> beta=[";
  for (std::size_t i = 0; i < M.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < M.size(); ++j) os << (j ? "," : "") << M[i][j];
    os << "]";
  }
  os << "] zeta_" << zeta_order();
  return os.str();
}

Subgroup radical(const DivisionClass& D) {
  const auto& T = D.support();
  std::vector<int> r;
  for (int t : T.indices()) {
    bool all = true;
    for (int s : T.indices())
      if (D.beta_exp(t, s) != 0) {
        all = false;
        break;
      }
    if (all) r.push_back(t);
  }
  return Subgroup::from_indices(D.group(), r);
}

bool is_square_type(const Subgroup& T) {
  std::map<int, int> count;  // prime power -> multiplicity
  for (const auto& b : independent_basis(T)) {
    int o = T.parent().elem_order(b);
    for (int p = 2; o > 1; ++p) {
      int q = 1;
      while (o % p == 0) {
        o /= p;
        q *= p;
      }
      if (q > 1) ++count[q];
    }
  }
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

BrauerClass brauer_lift(const DivisionClass& D) {
  GLIM_CHECK(D.is_nondegenerate(), "brauer_lift needs a nondegenerate class");
  const auto& G = D.group();
  const auto& T = D.support();
  GLIM_ASSERT(is_square_type(T), "support of a nondegenerate class must be a product of squares");
  const auto basis = D.basis();
  std::vector<int> bidx;
  for (const auto& b : basis) bidx.push_back(G.index(b));
  std::map<std::vector<int>, int> by_key;
  for (int t : T.indices()) {
    std::vector<int> key;
    for (int b : bidx) key.push_back(D.beta_exp(t, b));
    GLIM_ASSERT(by_key.emplace(key, t).second, "beta(t, .) not injective on a nondegenerate class");
  }
  const int N = G.order();
  std::vector<int> tpsi(N);
  for (int psi = 0; psi < N; ++psi) {
    std::vector<int> key;
    for (int b : bidx) key.push_back(G.char_exp(psi, b));
    auto it = by_key.find(key);
    GLIM_ASSERT(it != by_key.end(), "no t_psi for a character restricted to T");
    tpsi[psi] = it->second;
  }
  BrauerClass out{G, std::vector<int>(static_cast<std::size_t>(N) * N)};
  for (int chi = 0; chi < N; ++chi)
    for (int psi = 0; psi < N; ++psi) out.B[static_cast<std::size_t>(chi) * N + psi] = G.char_exp(chi, tpsi[psi]);
  GLIM_ASSERT(radical(out) == perp(T), "radical of the lifted bicharacter differs from T^perp");
  return out;
}

BrauerClass brauer_product(const BrauerClass& a, const BrauerClass& b) {
  GLIM_CHECK(a.G == b.G, "Brauer classes over different groups");
  BrauerClass r = a;
  const int n = a.G.exponent();
  for (std::size_t i = 0; i < r.B.size(); ++i) r.B[i] = (a.B[i] + b.B[i]) % n;
  return r;
}

BrauerClass brauer_inverse(const BrauerClass& a) {
  BrauerClass r = a;
  const int n = a.G.exponent();
  for (auto& x : r.B) x = modn(-x, n);
  return r;
}

Subgroup radical(const BrauerClass& B) {
  const int N = B.G.order();
  std::vector<int> r;
  for (int chi = 0; chi < N; ++chi) {
    bool all = true;
    for (int psi = 0; psi < N && all; ++psi) all = B.at(chi, psi) == 0;
    if (all) r.push_back(chi);
  }
  return Subgroup::from_indices(B.G, r);
}

DivisionClass division_from_brauer(const BrauerClass& B) {
  const auto& G = B.G;
  const int n = G.exponent();
  const int N = G.order();
  std::vector<int> unit_chars;
  for (int i = 0; i < G.rank(); ++i) {
    GroupElem e = G.identity();
    e.c[i] = G.factors()[i] > 1 ? 1 : 0;
    unit_chars.push_back(G.index(e));
  }
  // g_psi is the element with chi(g_psi) = B(chi, psi) for all chi.
  std::vector<int> g_of(N);
  for (int psi = 0; psi < N; ++psi) {
    std::vector<long> c(G.rank(), 0);
    for (int i = 0; i < G.rank(); ++i) {
      const int step = n / G.factors()[i];
      const int v = B.at(unit_chars[i], psi);
      GLIM_ASSERT(v % step == 0, "Brauer bicharacter value outside the character group");
      c[i] = v / step;
    }
    g_of[psi] = G.index(G.make(c));
    for (int chi = 0; chi < N; ++chi)
      GLIM_ASSERT(G.char_exp(chi, g_of[psi]) == B.at(chi, psi), "B(., psi) is not a character");
  }
  std::vector<int> support_idx(g_of.begin(), g_of.end());
  Subgroup TE = Subgroup::from_indices(G, support_idx);
  GLIM_ASSERT(TE == perp(radical(B)), "support of E differs from rad(B)^perp");
  const int m = TE.size();
  std::vector<int> table(static_cast<std::size_t>(m) * m, -1);
  auto pos = [&](int g) { return static_cast<int>(std::lower_bound(TE.indices().begin(), TE.indices().end(), g) - TE.indices().begin()); };
  for (int psi = 0; psi < N; ++psi)
    for (int phi = 0; phi < N; ++phi) {
      int& slot = table[static_cast<std::size_t>(pos(g_of[psi])) * m + pos(g_of[phi])];
      const int v = B.at(psi, phi);
      GLIM_ASSERT(slot < 0 || slot == v, "induced beta on T_E is not well defined");
      slot = v;
    }
  return DivisionClass::from_table(TE, std::move(table), true);
}

DivisionClass op_class(const DivisionClass& D) {
  std::vector<int> t = D.table();
  const int n = D.zeta_order();
  for (auto& x : t) x = modn(-x, n);
  return DivisionClass::from_table(D.support(), std::move(t), false);
}

namespace {

BrauerProduct product_with(const DivisionClass& D, const DivisionClass& Dp, bool opposite) {
  GLIM_CHECK(D.group() == Dp.group(), "division classes over different groups");
  const auto& G = D.group();
  BrauerClass Bp = brauer_lift(Dp);
  if (opposite) Bp = brauer_inverse(Bp);
  BrauerClass BE = brauer_product(brauer_lift(D), Bp);
  DivisionClass E = division_from_brauer(BE);
  Subgroup H = join(D.support(), Dp.support());
  const auto& TE = E.support();
  GLIM_ASSERT(TE.subset_of(H), "T_E is not contained in T T'");
  const int inter = intersect(D.support(), Dp.support()).size();
  const long m2num = static_cast<long>(inter) * TE.size();
  GLIM_ASSERT(m2num % H.size() == 0, "multiplicity square is not an integer");
  const long m2 = m2num / H.size();
  const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m2))));
  GLIM_ASSERT(static_cast<long>(m) * m == m2 && m > 0, "multiplicity is not a positive integer");
  GroupRingElem y(G);
  std::vector<char> covered(G.order(), 0);
  for (int h : H.indices()) {
    if (covered[h]) continue;
    y.set(h, m);
    for (int t : TE.indices()) covered[G.mul_index(h, t)] = 1;
  }
  GLIM_ASSERT(y * y.bar() * x_H(TE) == x_H(D.support()) * x_H(Dp.support()),
              "dimension identity y ybar x_TE = x_T x_T' fails");
  return BrauerProduct{E, y, H, m};
}

}  // namespace

BrauerProduct brauer_mul(const DivisionClass& D, const DivisionClass& Dp) { return product_with(D, Dp, true); }

BrauerProduct brauer_tensor(const DivisionClass& D, const DivisionClass& Dp) { return product_with(D, Dp, false); }

std::vector<DivisionClass> division_classes_on(const Subgroup& T) {
  const auto& G = T.parent();
  if (T.size() == 1) return {DivisionClass::trivial(G)};
  if (!is_square_type(T)) return {};
  const int n = G.exponent();
  const auto basis = independent_basis(T);
  const std::size_t r = basis.size();
  std::vector<int> ord(r);
  for (std::size_t i = 0; i < r; ++i) ord[i] = G.elem_order(basis[i]);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) slots.emplace_back(i, j);
  std::vector<DivisionClass> out;
  std::vector<std::vector<long>> M(r, std::vector<long>(r, 0));
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == slots.size()) {
      auto D = DivisionClass::from_generators(G, basis, M, n, false);
      if (D.is_nondegenerate()) out.push_back(D);
      return;
    }
    auto [i, j] = slots[k];
    const int g = std::gcd(ord[i], ord[j]);
    for (int v = 0; v < g; ++v) {
      M[i][j] = static_cast<long>(v) * (n / g);
      M[j][i] = modn(-M[i][j], n);
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<DivisionClass> all_division_classes(const FinAbGroup& G) {
  std::vector<DivisionClass> out;
  for (const auto& T : all_subgroups(G))
    for (auto& D : division_classes_on(T)) out.push_back(std::move(D));
  return out;
}

}  // namespace glim
