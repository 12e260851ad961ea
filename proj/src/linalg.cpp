#include "fockbridge/linalg.hpp"

#include <utility>

namespace fockbridge {

ScalarMatrix identity_matrix(std::size_t n) {
  ScalarMatrix m(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  ScalarMatrix out(a.size(), std::vector<Scalar>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

ScalarMatrix invert(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  ScalarMatrix a = m, inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Scalar scale = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[col][j].is_zero()) a[col][j] *= scale;
      if (!inv[col][j].is_zero()) inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
        if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::size_t rank(ScalarMatrix a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    Scalar inv = a[r][col].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col].is_zero()) continue;
      Scalar f = a[i][col] * inv;
      for (std::size_t j = col; j < cols; ++j)
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace fockbridge
