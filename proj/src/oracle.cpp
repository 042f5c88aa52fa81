#include "glim/oracle.hpp"

#include <algorithm>
#include <cstdlib>
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

// Positions, group law and lower-triangular cocycle of a division class.
struct Cocycle {
  std::vector<int> elems;  // G indices of T, position order
  std::vector<int> mul;    // position x position -> position
  std::vector<int> sigma;  // exponent of zeta_N
  int size() const { return static_cast<int>(elems.size()); }
};

Cocycle make_cocycle(const DivisionClass& D, int N) {
  const auto& G = D.group();
  const auto& T = D.support();
  const int n = G.exponent();
  const int scale = N / n;
  Cocycle c;
  c.elems = T.indices();
  const int m = c.size();
  std::vector<int> pos(G.order(), -1);
  for (int p = 0; p < m; ++p) pos[c.elems[p]] = p;
  c.mul.resize(static_cast<std::size_t>(m) * m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) c.mul[p * m + q] = pos[G.mul_index(c.elems[p], c.elems[q])];
  // coordinates of each element in an independent basis
  const auto basis = D.basis();
  const std::size_t r = basis.size();
  std::vector<int> ord(r);
  for (std::size_t i = 0; i < r; ++i) ord[i] = G.elem_order(basis[i]);
  std::vector<std::vector<int>> coord(m);
  std::vector<int> a(r, 0);
  for (;;) {
    int idx = 0;
    for (std::size_t i = 0; i < r; ++i) idx = G.mul_index(idx, G.index(G.pow(basis[i], a[i])));
    coord[pos[idx]] = a;
    std::size_t i = 0;
    while (i < r && ++a[i] == ord[i]) a[i++] = 0;
    if (i == r) break;
  }
  if (r == 0) coord[0] = {};
  std::vector<std::vector<int>> bexp(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) bexp[i][j] = D.beta_exp(G.index(basis[i]), G.index(basis[j]));
  c.sigma.resize(static_cast<std::size_t>(m) * m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      long s = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < i; ++j) s += static_cast<long>(coord[p][i]) * coord[q][j] * bexp[i][j];
      c.sigma[p * m + q] = modn(s * scale, N);
    }
  // commutation X_s X_t = beta(s,t) X_t X_s
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      GLIM_ASSERT(modn(c.sigma[p * m + q] - c.sigma[q * m + p], N) ==
                      modn(static_cast<long>(D.beta_exp(c.elems[p], c.elems[q])) * scale, N),
                  "cocycle does not realize beta");
  return c;
}

// Sparse elements of an oracle algebra over Q(zeta_N).
using Vec = std::map<int, CycNum>;

Vec mul(const FiniteGradedAlgebra& A, const Vec& x, const Vec& y) {
  Vec r;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      MonoProduct p = A.product(i, j);
      if (p.is_zero()) continue;
      CycNum v = (a * b).times_zeta(p.e);
      auto it = r.find(p.k);
      if (it == r.end())
        r.emplace(p.k, std::move(v));
      else
        it->second += v;
    }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

Vec monomial(int k, int N) { return Vec{{k, CycNum(N, 1)}}; }

// lambda with x = lambda * y, if any (y nonzero).
std::optional<CycNum> ratio(const Vec& x, const Vec& y) {
  GLIM_ASSERT(!y.empty(), "ratio against zero");
  if (x.size() != y.size()) return std::nullopt;
  const auto& [k, yk] = *y.begin();
  auto it = x.find(k);
  if (it == x.end()) return std::nullopt;
  CycNum lam = it->second / yk;
  for (const auto& [j, v] : y) {
    auto jt = x.find(j);
    if (jt == x.end() || jt->second != lam * v) return std::nullopt;
  }
  return lam;
}

// Rank of sparse vectors by elimination on leading indices.
int sparse_rank(const std::vector<Vec>& vs) {
  std::map<int, Vec> pivots;
  int rank = 0;
  for (Vec v : vs) {
    while (!v.empty()) {
      const int lead = v.begin()->first;
      auto pit = pivots.find(lead);
      if (pit == pivots.end()) {
        pivots.emplace(lead, v);
        ++rank;
        break;
      }
      CycNum f = v.begin()->second / pit->second.begin()->second;
      for (const auto& [j, c] : pit->second) {
        auto it = v.find(j);
        CycNum d = c * f;
        if (it == v.end())
          v.emplace(j, -d);
        else {
          it->second -= d;
          if (it->second.is_zero()) v.erase(it);
        }
      }
    }
  }
  return rank;
}

// Arithmetic modulo a prime P = 1 mod N with an element w of order N.
struct ModField {
  unsigned long long P = 0;
  std::vector<unsigned long long> wpow;  // w^e, e in [0, N)

  static unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
    return static_cast<unsigned long long>((static_cast<unsigned __int128>(a) * b) % m);
  }
  static unsigned long long powmod(unsigned long long a, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  }
  unsigned long long inv(unsigned long long a) const { return powmod(a, P - 2, P); }

  explicit ModField(int N) {
    auto is_prime = [](unsigned long long x) {
      if (x < 2) return false;
      for (unsigned long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
      return true;
    };
    unsigned long long k = (1ULL << 30) / N;
    while (!is_prime(k * N + 1)) ++k;
    P = k * N + 1;
    std::vector<int> primes;
    for (int q = 2, m = N; m > 1; ++q)
      if (m % q == 0) {
        primes.push_back(q);
        while (m % q == 0) m /= q;
      }
    for (unsigned long long g = 2;; ++g) {
      unsigned long long w = powmod(g, (P - 1) / N, P);
      bool ok = true;
      for (int q : primes)
        if (powmod(w, N / q, P) == 1) ok = false;
      if (ok) {
        wpow.resize(N);
        wpow[0] = 1;
        for (int e = 1; e < N; ++e) wpow[e] = mulmod(wpow[e - 1], w, P);
        break;
      }
    }
  }
};

// Incremental row echelon form modulo P.
struct ModEchelon {
  const ModField& F;
  std::size_t cols;
  std::map<std::size_t, std::vector<unsigned long long>> rows;  // pivot column -> row (pivot = 1)
  ModEchelon(const ModField& f, std::size_t c) : F(f), cols(c) {}
  bool add(std::vector<unsigned long long> v) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (v[c] == 0) continue;
      auto it = rows.find(c);
      if (it == rows.end()) {
        const unsigned long long iv = F.inv(v[c]);
        for (auto& x : v) x = ModField::mulmod(x, iv, F.P);
        rows.emplace(c, std::move(v));
        return true;
      }
      const unsigned long long f = v[c];
      for (std::size_t j = c; j < cols; ++j)
        v[j] = (v[j] + F.P - ModField::mulmod(f, it->second[j], F.P)) % F.P;
    }
    return false;
  }
  std::size_t rank() const { return rows.size(); }
};

// Rank of dense CycNum rows (exact fallback).
std::size_t exact_rank(std::vector<std::vector<CycNum>> rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      CycNum f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Center of A equals F*1, checked degree by degree.
void check_central(const FiniteGradedAlgebra& A, const std::vector<std::vector<int>>& by_deg) {
  const int N = A.conductor();
  const ModField F(N);
  const int D = A.dim();
  for (std::size_t g = 0; g < by_deg.size(); ++g) {
    const auto& cols = by_deg[g];
    if (cols.empty()) continue;
    const std::size_t target = cols.size() - (g == 0 ? 1 : 0);
    if (target == 0) continue;
    std::map<int, std::size_t> col_of;
    for (std::size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;
    ModEchelon ech(F, cols.size());
    std::vector<std::vector<CycNum>> exact_rows;
    // equations: coefficient of w in z u - u z
    for (int u = 0; u < D && ech.rank() < target; ++u) {
      std::map<int, std::vector<std::pair<std::size_t, int>>> eq;  // w -> (col, exponent) with sign folded in
      for (std::size_t c = 0; c < cols.size(); ++c) {
        MonoProduct zu = A.product(cols[c], u), uz = A.product(u, cols[c]);
        if (!zu.is_zero()) eq[zu.k].push_back({c, zu.e});
        if (!uz.is_zero()) eq[uz.k].push_back({c, modn(uz.e + N / 2, N)});  // minus sign = zeta^{N/2}
      }
      for (const auto& [w, terms] : eq) {
        std::vector<unsigned long long> row(cols.size(), 0);
        std::vector<CycNum> xrow(cols.size(), CycNum(N));
        for (const auto& [c, e] : terms) {
          row[c] = (row[c] + F.wpow[e]) % F.P;
          xrow[c] += CycNum::zeta(N, e);
        }
        ech.add(row);
        exact_rows.push_back(std::move(xrow));
        if (ech.rank() >= target) break;
      }
    }
    if (ech.rank() >= target) continue;
    // modular rank may undercount; decide exactly
    const std::size_t r = exact_rank(exact_rows, cols.size());
    GLIM_CHECK(r >= target, "algebra is not central simple: center has a component in degree " +
                                A.group().elem(static_cast<int>(g)).to_string());
  }
}

}  // namespace

int oracle_conductor(const FinAbGroup& G) {
  const int n = G.exponent();
  return std::lcm(2, n * n);
}

int oracle_max_dim() {
  if (const char* s = std::getenv("GLIM_MAX_DIM")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 4096;
}

MonoProduct FiniteGradedAlgebra::product(int i, int j) const {
  switch (kind_) {
    case Kind::kTable:
      return table_[static_cast<std::size_t>(i) * dim() + j];
    case Kind::kOpposite:
      return a_->product(j, i);
    case Kind::kTensor: {
      const int db = b_->dim();
      MonoProduct pa = a_->product(i / db, j / db);
      if (pa.is_zero()) return {};
      MonoProduct pb = b_->product(i % db, j % db);
      if (pb.is_zero()) return {};
      return {pa.k * db + pb.k, (pa.e + pb.e) % N_};
    }
  }
  return {};
}

std::string FiniteGradedAlgebra::label(int i) const {
  switch (kind_) {
    case Kind::kTable:
      return labels_[i];
    case Kind::kOpposite:
      return a_->label(i) + "^op";
    case Kind::kTensor:
      return a_->label(i / b_->dim()) + " (x) " + b_->label(i % b_->dim());
  }
  return {};
}

void FiniteGradedAlgebra::check_associative() const {
  const int D = dim();
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      MonoProduct ij = product(i, j);
      for (int k = 0; k < D; ++k) {
        MonoProduct jk = product(j, k);
        MonoProduct left = ij.is_zero() ? MonoProduct{} : product(ij.k, k);
        MonoProduct right = jk.is_zero() ? MonoProduct{} : product(i, jk.k);
        if (!left.is_zero()) left.e = (left.e + ij.e) % N_;
        if (!right.is_zero()) right.e = (right.e + jk.e) % N_;
        GLIM_ASSERT(left.k == right.k && (left.is_zero() || left.e == right.e),
                    "structure constants are not associative at (" + label(i) + ", " + label(j) + ", " +
                        label(k) + ")");
      }
    }
}

AlgebraPtr build_twisted(const DivisionClass& D) {
  const auto& G = D.group();
  const int N = oracle_conductor(G);
  Cocycle c = make_cocycle(D, N);
  const int m = c.size();
  GLIM_CHECK(m <= oracle_max_dim(), "dimension cap exceeded");
  std::shared_ptr<FiniteGradedAlgebra> A(new FiniteGradedAlgebra(G, N));
  A->deg_ = c.elems;
  A->unit_ = {0};
  A->table_.resize(static_cast<std::size_t>(m) * m);
  for (int p = 0; p < m; ++p) {
    A->labels_.push_back("X" + G.elem(c.elems[p]).to_string());
    for (int q = 0; q < m; ++q) A->table_[p * m + q] = {c.mul[p * m + q], c.sigma[p * m + q]};
  }
  if (m <= 64) A->check_associative();
  return A;
}

AlgebraPtr build_matrix(const GroupRingElem& x, const std::optional<DivisionClass>& Dopt) {
  const auto& G = x.group();
  GLIM_CHECK(!x.is_zero() && x.is_nonneg_integer(), "matrix label must be a nonzero nonnegative integer element");
  const DivisionClass D = Dopt ? *Dopt : DivisionClass::trivial(G);
  GLIM_CHECK(D.group() == G, "division class over a different group");
  const int N = oracle_conductor(G);
  Cocycle c = make_cocycle(D, N);
  std::vector<int> tuple;
  for (int g = 0; g < G.order(); ++g)
    for (long k = 0; k < x.coeff(g).get_num().get_si(); ++k) tuple.push_back(g);
  const long d = static_cast<long>(tuple.size());
  const long m = c.size();
  GLIM_CHECK(d * d * m <= oracle_max_dim(), "dimension cap exceeded (GLIM_MAX_DIM)");
  const int dim = static_cast<int>(d * d * m);
  std::shared_ptr<FiniteGradedAlgebra> A(new FiniteGradedAlgebra(G, N));
  auto idx = [&](long i, long j, long t) { return static_cast<int>((i * d + j) * m + t); };
  A->deg_.resize(dim);
  A->labels_.resize(dim);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long t = 0; t < m; ++t) {
        const int deg = G.mul_index(G.mul_index(tuple[i], c.elems[t]), G.inv_index(tuple[j]));
        A->deg_[idx(i, j, t)] = deg;
        A->labels_[idx(i, j, t)] = "E" + std::to_string(i + 1) + std::to_string(j + 1) + "(X" +
                                   G.elem(c.elems[t]).to_string() + ")";
      }
  for (long i = 0; i < d; ++i) A->unit_.push_back(idx(i, i, 0));
  A->table_.assign(static_cast<std::size_t>(dim) * dim, MonoProduct{});
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long s = 0; s < m; ++s)
        for (long l = 0; l < d; ++l)
          for (long t = 0; t < m; ++t)
            A->table_[static_cast<std::size_t>(idx(i, j, s)) * dim + idx(j, l, t)] = {
                idx(i, l, c.mul[s * m + t]), c.sigma[s * m + t]};
  if (dim <= 64) A->check_associative();
  return A;
}

AlgebraPtr tensor(AlgebraPtr A, AlgebraPtr B) {
  GLIM_CHECK(A->group() == B->group(), "tensor factors graded by different groups");
  GLIM_CHECK(static_cast<long>(A->dim()) * B->dim() <= oracle_max_dim(), "dimension cap exceeded (GLIM_MAX_DIM)");
  const auto& G = A->group();
  std::shared_ptr<FiniteGradedAlgebra> T(new FiniteGradedAlgebra(G, A->conductor()));
  T->kind_ = FiniteGradedAlgebra::Kind::kTensor;
  T->a_ = A;
  T->b_ = B;
  const int db = B->dim();
  T->deg_.resize(static_cast<std::size_t>(A->dim()) * db);
  for (int i = 0; i < A->dim(); ++i)
    for (int j = 0; j < db; ++j) T->deg_[i * db + j] = G.mul_index(A->degree(i), B->degree(j));
  for (int i : A->unit())
    for (int j : B->unit()) T->unit_.push_back(i * db + j);
  std::sort(T->unit_.begin(), T->unit_.end());
  if (T->dim() <= 64) T->check_associative();
  return T;
}

AlgebraPtr opposite(AlgebraPtr A) {
  std::shared_ptr<FiniteGradedAlgebra> O(new FiniteGradedAlgebra(A->group(), A->conductor()));
  O->kind_ = FiniteGradedAlgebra::Kind::kOpposite;
  O->a_ = A;
  O->deg_ = A->deg_;
  O->unit_ = A->unit_;
  return O;
}

std::vector<int> canonical_coset_multiset(const GroupRingElem& y, const Subgroup& T, FinAbGroup* quotient_out) {
  const auto& G = y.group();
  GLIM_CHECK(y.is_nonneg_integer(), "coset multiset of a non-multiset");
  Quotient q = quotient(G, T);
  const int M = q.Q.order();
  std::vector<int> counts(M, 0);
  for (int g = 0; g < G.order(); ++g) counts[q.proj[g]] += static_cast<int>(y.coeff(g).get_num().get_si());
  std::vector<int> best;
  for (int s = 0; s < M; ++s) {
    std::vector<int> shifted(M);
    for (int x = 0; x < M; ++x) shifted[x] = counts[q.Q.mul_index(x, s)];
    if (best.empty() || shifted > best) best = std::move(shifted);
  }
  if (quotient_out) *quotient_out = q.Q;
  return best;
}

std::string WedderburnInvariant::to_string() const {
  std::ostringstream os;
  os << "E: " << E.to_string() << "; cosets over " << quotient_group.to_string() << ": [";
  for (std::size_t i = 0; i < coset_multiset.size(); ++i) os << (i ? "," : "") << coset_multiset[i];
  os << "]";
  return os.str();
}

WedderburnInvariant graded_simple_decompose(const FiniteGradedAlgebra& A) {
  const auto& G = A.group();
  const int N = A.conductor();
  const int n = G.exponent();
  const int D = A.dim();
  std::vector<std::vector<int>> by_deg(G.order());
  for (int i = 0; i < D; ++i) by_deg[A.degree(i)].push_back(i);
  check_central(A, by_deg);

  // An identity arrow q of degree e, its loops and the arrows ending at it.
  int q = -1;
  for (int i : by_deg[0]) {
    MonoProduct p = A.product(i, i);
    if (p.k == i && p.e == 0) {
      q = i;
      break;
    }
  }
  GLIM_CHECK(q >= 0, "no idempotent basis element in degree e: unsupported algebra shape");
  std::vector<int> loops, column, loop_pos(D, -1);
  for (int i = 0; i < D; ++i) {
    MonoProduct r = A.product(i, q);
    if (r.k != i || r.e != 0) continue;
    column.push_back(i);
    MonoProduct l = A.product(q, i);
    if (l.k == i && l.e == 0) {
      loop_pos[i] = static_cast<int>(loops.size());
      loops.push_back(i);
    }
  }
  auto commutator = [&](int u, int v) {
    MonoProduct a = A.product(u, v), b = A.product(v, u);
    GLIM_CHECK(!a.is_zero() && a.k == b.k && loop_pos[a.k] >= 0, "loops at q do not form a group: unsupported shape");
    return modn(a.e - b.e, N);
  };
  std::vector<int> Le;
  for (int u : loops)
    if (A.degree(u) == 0) Le.push_back(u);
  // Maximal commuting subgroup I of the degree-e loops, grown from the radical.
  std::vector<char> inI(D, 0);
  std::vector<int> I;
  auto close = [&]() {
    for (std::size_t a = 0; a < I.size(); ++a)
      for (std::size_t b = 0; b <= a; ++b) {
        int w = A.product(I[a], I[b]).k;
        if (!inI[w]) {
          inI[w] = 1;
          I.push_back(w);
        }
      }
  };
  for (int u : Le) {
    bool central = true;
    for (int v : Le)
      if (commutator(u, v) != 0) {
        central = false;
        break;
      }
    if (central && !inI[u]) {
      inI[u] = 1;
      I.push_back(u);
    }
  }
  close();
  for (int u : Le) {
    if (inI[u]) continue;
    bool commutes = true;
    for (int v : I)
      if (commutator(u, v) != 0) {
        commutes = false;
        break;
      }
    if (!commutes) continue;
    inI[u] = 1;
    I.push_back(u);
    close();
  }
  // Refine q to a common eigen-projector p of I.
  Vec p = monomial(q, N);
  for (int u : I) {
    if (u == q) continue;
    std::vector<std::pair<int, int>> pw{{q, 0}};  // u^a = zeta^{e_a} basis_{k_a}
    for (;;) {
      MonoProduct nx = A.product(pw.back().first, u);
      GLIM_ASSERT(!nx.is_zero(), "loop power vanished");
      const int e = (pw.back().second + nx.e) % N;
      if (nx.k == q) {
        pw.push_back({q, e});
        break;
      }
      pw.push_back({nx.k, e});
    }
    const int o = static_cast<int>(pw.size()) - 1;
    const int c = pw.back().second;
    bool refined = false;
    for (int t = 0; t < o && !refined; ++t) {
      const long num = c + static_cast<long>(N) * t;
      if (num % o != 0) continue;
      const int mu = static_cast<int>(num / o);
      Vec f;
      for (int a = 0; a < o; ++a) {
        CycNum coef = CycNum::zeta(N, pw[a].second - static_cast<long>(a) * mu) * Rational(1, o);
        auto it = f.find(pw[a].first);
        if (it == f.end())
          f.emplace(pw[a].first, coef);
        else
          it->second += coef;
      }
      Vec np = mul(A, p, f);
      if (!np.empty()) {
        p = std::move(np);
        refined = true;
      }
    }
    GLIM_ASSERT(refined, "eigenvalue of a loop outside Q(zeta_N)");
  }
  GLIM_ASSERT(mul(A, p, p) == p, "refined element is not idempotent");
  // p A_e p must be F p.
  for (int u : Le) {
    Vec w = mul(A, mul(A, p, monomial(u, N)), p);
    GLIM_CHECK(w.empty() || ratio(w, p).has_value(), "p A_e p has dimension > 1: idempotent not primitive");
  }
  // E = p A p: one homogeneous unit per degree.
  std::map<int, Vec> unit_of;
  for (int u : loops) {
    Vec w = mul(A, mul(A, p, monomial(u, N)), p);
    if (w.empty()) continue;
    auto it = unit_of.find(A.degree(u));
    if (it == unit_of.end())
      unit_of.emplace(A.degree(u), std::move(w));
    else
      GLIM_ASSERT(ratio(w, it->second).has_value(), "graded component of pAp has dimension > 1");
  }
  std::vector<int> te;
  for (const auto& kv : unit_of) te.push_back(kv.first);
  Subgroup TE = Subgroup::from_indices(G, te);
  const int m = TE.size();
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Vec& va = unit_of.at(te[a]);
      const Vec& vb = unit_of.at(te[b]);
      auto lam = ratio(mul(A, va, vb), mul(A, vb, va));
      GLIM_ASSERT(lam.has_value(), "homogeneous units of pAp do not commute up to a scalar");
      auto k = lam->root_of_unity_exponent();
      GLIM_ASSERT(k.has_value() && *k % (N / n) == 0, "commutation scalar is not an n-th root of unity");
      table[static_cast<std::size_t>(a) * m + b] = *k / (N / n);
    }
  DivisionClass E = DivisionClass::from_table(TE, std::move(table), true);
  // V = A p graded by degree.
  std::vector<std::vector<Vec>> vecs(G.order());
  for (int u : column) vecs[A.degree(u)].push_back(mul(A, monomial(u, N), p));
  std::vector<int> vdim(G.order(), 0);
  long total = 0;
  for (int g = 0; g < G.order(); ++g) {
    vdim[g] = sparse_rank(vecs[g]);
    total += vdim[g];
  }
  GLIM_CHECK(total * total == static_cast<long>(D) * m, "A is not simple: dim(Ap)^2 != dim A * |T_E|");
  GroupRingElem dims(G);
  for (int g = 0; g < G.order(); ++g) dims.set(g, vdim[g]);
  // per-coset counts divided by |T_E|
  Quotient qt = quotient(G, TE);
  std::vector<int> per(qt.Q.order(), 0);
  for (int g = 0; g < G.order(); ++g) per[qt.proj[g]] += vdim[g];
  GroupRingElem yq(G);
  for (int g = 0; g < G.order(); ++g) {
    if (per[qt.proj[g]] == 0) continue;
    GLIM_ASSERT(per[qt.proj[g]] % m == 0, "coset dimension not divisible by |T_E|");
    yq.set(g, per[qt.proj[g]] / m);
    per[qt.proj[g]] = 0;  // first (minimal) representative carries the count
  }
  WedderburnInvariant inv{E, qt.Q, {}, GroupRingElem(G)};
  inv.coset_multiset = canonical_coset_multiset(yq, TE);
  // lift the canonical multiset to minimal coset representatives
  std::vector<int> min_rep(qt.Q.order(), -1);
  for (int g = 0; g < G.order(); ++g)
    if (min_rep[qt.proj[g]] < 0) min_rep[qt.proj[g]] = g;
  for (int x = 0; x < qt.Q.order(); ++x)
    if (inv.coset_multiset[x]) inv.lifted.set(min_rep[x], inv.coset_multiset[x]);
  return inv;
}

bool graded_iso_finite(const FiniteGradedAlgebra& A, const FiniteGradedAlgebra& B) {
  GLIM_CHECK(A.group() == B.group(), "algebras graded by different groups");
  return graded_simple_decompose(A) == graded_simple_decompose(B);
}

namespace {

PairCheck check_pair(const std::vector<DivisionClass>& classes, int i, int j) {
  PairCheck r{i, j, false, {}};
  try {
    const auto& D = classes[i];
    const auto& Dp = classes[j];
    BrauerProduct bp = brauer_mul(D, Dp);
    WedderburnInvariant inv = graded_simple_decompose(*tensor(build_twisted(D), opposite(build_twisted(Dp))));
    const bool e_ok = inv.E == bp.E;
    const bool y_ok = e_ok && canonical_coset_multiset(bp.y, bp.E.support()) == inv.coset_multiset;
    r.ok = e_ok && y_ok;
    if (!r.ok) r.detail = "brauer_mul E=" + bp.E.to_string() + " y=" + bp.y.to_string() + " vs oracle " + inv.to_string();
  } catch (const std::exception& ex) {
    r.detail = ex.what();
  }
  return r;
}

}  // namespace

ValidatedProduct brauer_mul_validated(const DivisionClass& D, const DivisionClass& Dp) {
  BrauerProduct bp = brauer_mul(D, Dp);
  WedderburnInvariant inv = graded_simple_decompose(*tensor(build_twisted(D), opposite(build_twisted(Dp))));
  if (inv.E == bp.E && canonical_coset_multiset(bp.y, bp.E.support()) == inv.coset_multiset)
    return {bp, true, false};
  // the oracle is ground truth
  BrauerProduct fb{inv.E, inv.lifted, bp.H, 0};
  return {fb, false, true};
}

std::vector<PairCheck> validate_pairs_serial(const std::vector<DivisionClass>& classes) {
  std::vector<PairCheck> out;
  const int k = static_cast<int>(classes.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.push_back(check_pair(classes, i, j));
  return out;
}

std::vector<PairCheck> validate_pairs(const std::vector<DivisionClass>& classes) {
  const long k = static_cast<long>(classes.size());
  std::vector<PairCheck> out(static_cast<std::size_t>(k * k));
#pragma omp parallel for schedule(dynamic)
  for (long idx = 0; idx < k * k; ++idx)
    out[idx] = check_pair(classes, static_cast<int>(idx / k), static_cast<int>(idx % k));
  return out;
}

}  // namespace glim
