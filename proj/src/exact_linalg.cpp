#include "parab/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace parab {

std::vector<std::vector<Rat>> nullspace(RatMat M, int cols) {
  const int rows = static_cast<int>(M.size());
  for (auto& r : M)
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("nullspace: ragged matrix");

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!M[i][c].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(M[p], M[r]);
    const Rat inv = Rat(1) / M[r][c];
    for (int j = c; j < cols; ++j) M[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      const Rat f = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = Rat(1);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) v[pivot_col[i]] = -M[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

void ldlt(const RatMat& B, RatMat& L, std::vector<Rat>& D) {
  const int n = static_cast<int>(B.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(B[i].size()) != n) throw std::invalid_argument("ldlt: not square");
    for (int j = 0; j < i; ++j)
      if (B[i][j] != B[j][i]) throw std::domain_error("ldlt: matrix not symmetric");
  }
  L.assign(n, std::vector<Rat>(n, Rat(0)));
  D.assign(n, Rat(0));
  for (int i = 0; i < n; ++i) L[i][i] = Rat(1);
  for (int j = 0; j < n; ++j) {
    Rat dj = B[j][j];
    for (int k = 0; k < j; ++k) dj -= L[j][k] * L[j][k] * D[k];
    if (dj.sign() <= 0) throw std::domain_error("ldlt: matrix not positive definite");
    D[j] = dj;
    for (int i = j + 1; i < n; ++i) {
      Rat s = B[i][j];
      for (int k = 0; k < j; ++k) s -= L[i][k] * L[j][k] * D[k];
      L[i][j] = s / dj;
    }
  }
}

void reduce_pair(const RatMat& A, const RatMat& B, RatMat& M, std::vector<Rat>& D, RatMat& L) {
  const int n = static_cast<int>(B.size());
  ldlt(B, L, D);
  // X = L^{-1} A: forward substitution on each column of A.
  RatMat X(n, std::vector<Rat>(n, Rat(0)));
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) {
      Rat s = A[i][c];
      for (int k = 0; k < i; ++k) s -= L[i][k] * X[k][c];
      X[i][c] = s;
    }
  // M = X L^{-T}: forward substitution on each row of X.
  M.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) {
      Rat s = X[r][j];
      for (int k = 0; k < j; ++k) s -= L[j][k] * M[r][k];
      M[r][j] = s;
    }
}

}  // namespace parab
