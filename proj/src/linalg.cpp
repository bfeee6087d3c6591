#include "qline/linalg.hpp"

namespace qline {

MPoly det_bareiss(std::vector<std::vector<MPoly>> a, const FieldCtx& F,
                  const std::vector<std::string>& vars) {
  const int n = (int)a.size();
  if (n == 0) return MPoly::constant(F, vars, Fq::one(F));
  MPoly prev = MPoly::constant(F, vars, Fq::one(F));
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i)
      for (int j = k; j < n; ++j)
        if (!a[i][j].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) return MPoly::zero(F, vars);
    if (pi != k) {
      std::swap(a[pi], a[k]);
      sign = -sign;
    }
    if (pj != k) {
      for (int i = 0; i < n; ++i) std::swap(a[i][pj], a[i][k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        MPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        if (num.is_zero()) {
          a[i][j] = std::move(num);
          continue;
        }
        auto q = num.try_divide_exact(prev);
        require(q.has_value(), errc::internal, "Bareiss division not exact");
        a[i][j] = std::move(*q);
      }
      a[i][k] = MPoly::zero(F, vars);
    }
    prev = a[k][k];
  }
  MPoly det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

FqMat FqMat::identity(const FieldCtx& ctx, int n) {
  FqMat m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Fq::one(ctx);
  return m;
}

FqMat FqMat::mul(const FqMat& o) const {
  require(cols == o.rows, errc::internal, "matrix shape");
  FqMat r(*F, rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<Fq> FqMat::apply(const std::vector<Fq>& v) const {
  require((int)v.size() == cols, errc::internal, "vector length");
  std::vector<Fq> out(rows, Fq::zero(*F));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out[i] += at(i, j) * v[j];
  return out;
}

FqMat FqMat::inverse() const {
  require(rows == cols, errc::internal, "inverse of non-square matrix");
  int n = rows;
  FqMat a = *this;
  FqMat inv = identity(*F, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    require(piv >= 0, errc::singular_matrix, "matrix not invertible");
    for (int c = 0; c < n; ++c) {
      std::swap(a.a[(size_t)piv * n + c], a.a[(size_t)col * n + c]);
      std::swap(inv.a[(size_t)piv * n + c], inv.a[(size_t)col * n + c]);
    }
    Fq s = a.at(col, col).inv();
    for (int c = 0; c < n; ++c) {
      a.at(col, c) *= s;
      inv.at(col, c) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Fq f = a.at(r, col);
      for (int c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

Fq FqMat::det() const {
  require(rows == cols, errc::internal, "det of non-square matrix");
  int n = rows;
  FqMat a = *this;
  Fq d = Fq::one(*F);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Fq::zero(*F);
    if (piv != col) {
      for (int c = 0; c < n; ++c)
        std::swap(a.a[(size_t)piv * n + c], a.a[(size_t)col * n + c]);
      d = -d;
    }
    d *= a.at(col, col);
    Fq s = a.at(col, col).inv();
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col).is_zero()) continue;
      Fq f = a.at(r, col) * s;
      for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
    }
  }
  return d;
}

int FqMat::rank() const {
  FqMat a = *this;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < cols; ++c)
      std::swap(a.a[(size_t)piv * cols + c], a.a[(size_t)rank * cols + c]);
    Fq s = a.at(rank, col).inv();
    for (int c = 0; c < cols; ++c) a.at(rank, c) *= s;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      Fq f = a.at(r, col);
      for (int c = 0; c < cols; ++c) a.at(r, c) -= f * a.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Fq>> FqMat::kernel() const {
  FqMat a = *this;
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < cols; ++c)
      std::swap(a.a[(size_t)piv * cols + c], a.a[(size_t)rank * cols + c]);
    Fq s = a.at(rank, col).inv();
    for (int c = 0; c < cols; ++c) a.at(rank, c) *= s;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a.at(r, col).is_zero()) continue;
      Fq f = a.at(r, col);
      for (int c = 0; c < cols; ++c) a.at(r, c) -= f * a.at(rank, c);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Fq>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fq> v(cols, Fq::zero(*F));
    v[free] = Fq::one(*F);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Fq>> FqMat::to_rows() const {
  std::vector<std::vector<Fq>> out(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out[i].push_back(at(i, j));
  return out;
}

}  // namespace qline
