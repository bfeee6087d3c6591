#pragma once

#include <vector>

#include "qline/mpoly.hpp"

namespace qline {

/// Fraction-free Bareiss determinant with full pivoting; exact over the
/// polynomial ring.
MPoly det_bareiss(std::vector<std::vector<MPoly>> a, const FieldCtx& F,
                  const std::vector<std::string>& vars);

/// Dense matrix over one field; just enough for coordinate changes and small
/// eliminations.
struct FqMat {
  const FieldCtx* F = nullptr;
  int rows = 0, cols = 0;
  std::vector<Fq> a;

  FqMat() = default;
  FqMat(const FieldCtx& ctx, int r, int c)
      : F(&ctx), rows(r), cols(c), a((size_t)r * c, Fq::zero(ctx)) {}
  static FqMat identity(const FieldCtx& ctx, int n);

  Fq& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Fq& at(int i, int j) const { return a[(size_t)i * cols + j]; }

  FqMat mul(const FqMat& o) const;
  std::vector<Fq> apply(const std::vector<Fq>& v) const;
  /// errc::singular_matrix when not invertible.
  FqMat inverse() const;
  Fq det() const;
  int rank() const;
  /// Basis of the right kernel (column vectors).
  std::vector<std::vector<Fq>> kernel() const;
  std::vector<std::vector<Fq>> to_rows() const;
};

}  // namespace qline
