#include "linalg.hpp"

#include "glim/error.hpp"

namespace glim::linalg {

std::optional<std::pair<QMat, std::vector<Rational>>> independent_system(const QMat& A, const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  QMat R = A;
  std::vector<Rational> rhs = b;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && R[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(R[piv], R[row]);
    std::swap(rhs[piv], rhs[row]);
    for (std::size_t r = row + 1; r < m; ++r) {
      if (R[r][col] == 0) continue;
      Rational f = R[r][col] / R[row][col];
      for (std::size_t c = col; c < n; ++c) R[r][c] -= f * R[row][c];
      rhs[r] -= f * rhs[row];
    }
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (rhs[r] != 0) return std::nullopt;
  R.resize(row);
  rhs.resize(row);
  return std::make_pair(R, rhs);
}

std::optional<std::vector<Integer>> integer_row_combination(const ZMat& M, const std::vector<Integer>& t) {
  const std::size_t r = M.size();
  const std::size_t c = t.size();
  // rows = [M_i | e_i]
  ZMat H(r, std::vector<Integer>(c + r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    GLIM_ASSERT(M[i].size() == c, "integer_row_combination: shape");
    for (std::size_t j = 0; j < c; ++j) H[i][j] = M[i][j];
    H[i][c + i] = 1;
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    for (std::size_t j = row + 1; j < r; ++j) {
      if (H[j][col] == 0) continue;
      if (H[row][col] == 0) {
        std::swap(H[row], H[j]);
        continue;
      }
      Integer a = H[row][col], b = H[j][col], g, s, u;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag = a / g, bg = b / g;
      for (std::size_t k = 0; k < c + r; ++k) {
        Integer x = H[row][k], y = H[j][k];
        H[row][k] = s * x + u * y;
        H[j][k] = ag * y - bg * x;
      }
    }
    if (H[row][col] != 0) {
      pivots.push_back(col);
      ++row;
    }
  }
  std::vector<Integer> rem = t;
  std::vector<Integer> v(r, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const std::size_t p = pivots[k];
    for (std::size_t j = (k ? pivots[k - 1] + 1 : 0); j < p; ++j)
      if (rem[j] != 0) return std::nullopt;
    if (rem[p] == 0) continue;
    if (!mpz_divisible_p(rem[p].get_mpz_t(), H[k][p].get_mpz_t())) return std::nullopt;
    Integer q = rem[p] / H[k][p];
    for (std::size_t j = 0; j < c; ++j) rem[j] -= q * H[k][j];
    for (std::size_t i = 0; i < r; ++i) v[i] += q * H[k][c + i];
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return v;
}

std::optional<std::vector<Rational>> lp_vertex(const QMat& A, const std::vector<Rational>& b) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  if (m == 0) return std::vector<Rational>(n, 0);
  // Phase I tableau over columns [x | artificials | rhs].
  const std::size_t W = n + m + 1;
  QMat T(m + 1, std::vector<Rational>(W, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool neg = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = neg ? Rational(-A[i][j]) : A[i][j];
    T[i][n + i] = 1;
    T[i][W - 1] = neg ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // objective row: minimize sum of artificials, stored as reduced costs
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < W; ++j)
      if (j < n || j == W - 1) T[m][j] -= T[i][j];
  for (;;) {
    std::size_t enter = W;
    for (std::size_t j = 0; j < n + m; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == W) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][W - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    GLIM_ASSERT(leave < m, "lp_vertex: phase I unbounded");
    Rational p = T[leave][enter];
    for (auto& x : T[leave]) x /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j < W; ++j)
        if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (T[m][W - 1] != 0) return std::nullopt;
  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][W - 1];
  return x;
}

}  // namespace glim::linalg
