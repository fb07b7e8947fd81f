#ifndef DYNGAL_FP_LINALG_HPP
#define DYNGAL_FP_LINALG_HPP

#include <optional>
#include <vector>

// Dense linear algebra over F_p at desk scale (Gaussian elimination).

namespace dyngal::fpla {

inline int fp_inv(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  // p is tiny; brute-force inverse
  for (int b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  return 0;  // a == 0
}

inline int fp_norm(long long a, int p) {
  long long v = a % p;
  if (v < 0) v += p;
  return int(v);
}

/// Rank of a matrix given as rows.
inline int rank(int p, std::vector<std::vector<int>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  int rk = 0;
  for (std::size_t col = 0; col < cols && rk < int(rows.size()); ++col) {
    int pivot = -1;
    for (std::size_t i = rk; i < rows.size(); ++i)
      if (rows[i][col] % p != 0) {
        pivot = int(i);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rk], rows[pivot]);
    int inv = fp_inv(rows[rk][col], p);
    for (std::size_t j = col; j < cols; ++j) rows[rk][j] = fp_norm(1LL * rows[rk][j] * inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (int(i) == rk) continue;
      int f = fp_norm(rows[i][col], p);
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        rows[i][j] = fp_norm(rows[i][j] - 1LL * f * rows[rk][j], p);
    }
    ++rk;
  }
  return rk;
}

/// A nonzero vector c with sum_i c_i * rows[i] = 0, or nullopt when the rows
/// are linearly independent.
inline std::optional<std::vector<int>> left_dependency(int p,
                                                       std::vector<std::vector<int>> rows) {
  std::size_t n = rows.size();
  if (n == 0) return std::nullopt;
  std::size_t cols = rows[0].size();
  // Track row operations on an appended identity block.
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].resize(cols + n, 0);
    rows[i][cols + i] = 1;
  }
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < n; ++col) {
    std::size_t pivot = rk;
    while (pivot < n && rows[pivot][col] % p == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[rk], rows[pivot]);
    int inv = fp_inv(rows[rk][col], p);
    for (std::size_t j = 0; j < cols + n; ++j) rows[rk][j] = fp_norm(1LL * rows[rk][j] * inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rk) continue;
      int f = fp_norm(rows[i][col], p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols + n; ++j)
        rows[i][j] = fp_norm(rows[i][j] - 1LL * f * rows[rk][j], p);
    }
    ++rk;
  }
  for (std::size_t i = rk; i < n; ++i) {
    bool zero_row = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (rows[i][j] % p != 0) zero_row = false;
    if (zero_row) return std::vector<int>(rows[i].begin() + cols, rows[i].end());
  }
  return std::nullopt;
}

/// One solution x of A x = b (columns of A given as `cols`), or nullopt.
inline std::optional<std::vector<int>> solve(int p, const std::vector<std::vector<int>>& cols,
                                             const std::vector<int>& b) {
  std::size_t m = cols.size();       // unknowns
  std::size_t n = b.size();          // equations
  std::vector<std::vector<int>> aug(n, std::vector<int>(m + 1, 0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) aug[i][j] = fp_norm(cols[j][i], p);
  for (std::size_t i = 0; i < n; ++i) aug[i][m] = fp_norm(b[i], p);

  std::vector<int> pivot_col(n, -1);
  std::size_t rk = 0;
  for (std::size_t col = 0; col < m && rk < n; ++col) {
    std::size_t pivot = rk;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(aug[rk], aug[pivot]);
    int inv = fp_inv(aug[rk][col], p);
    for (std::size_t j = col; j <= m; ++j) aug[rk][j] = fp_norm(1LL * aug[rk][j] * inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == rk) continue;
      int f = aug[i][col];
      if (f == 0) continue;
      for (std::size_t j = col; j <= m; ++j)
        aug[i][j] = fp_norm(aug[i][j] - 1LL * f * aug[rk][j], p);
    }
    pivot_col[rk] = int(col);
    ++rk;
  }
  for (std::size_t i = rk; i < n; ++i)
    if (aug[i][m] != 0) return std::nullopt;  // inconsistent
  std::vector<int> x(m, 0);
  for (std::size_t i = 0; i < rk; ++i) x[pivot_col[i]] = aug[i][m];
  return x;
}

}  // namespace dyngal::fpla

#endif
