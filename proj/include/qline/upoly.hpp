#pragma once

#include <vector>

#include "qline/galois.hpp"

namespace qline {

/// Dense univariate polynomial over one FieldCtx; the workhorse behind
/// irreducibility testing, factorization and root finding. Coefficients are
/// stored low-to-high with no trailing zeros; the zero polynomial is empty.
struct UPoly {
  const FieldCtx* F = nullptr;
  std::vector<Fq> c;

  UPoly() = default;
  explicit UPoly(const FieldCtx& ctx) : F(&ctx) {}
  UPoly(const FieldCtx& ctx, std::vector<Fq> coeffs) : F(&ctx), c(std::move(coeffs)) {
    trim();
  }

  static UPoly zero(const FieldCtx& ctx) { return UPoly(ctx); }
  static UPoly constant(const FieldCtx& ctx, const Fq& a);
  static UPoly x(const FieldCtx& ctx);
  /// From residue coefficients, low-to-high.
  static UPoly from_residues(const FieldCtx& ctx, const std::vector<std::uint64_t>& r);

  bool is_zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }  // -1 for zero
  const Fq& lc() const { return c.back(); }
  const Fq& operator[](size_t i) const { return c[i]; }
  void trim();

  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }
  /// Deterministic total order: degree, then coefficients high-to-low.
  bool operator<(const UPoly& o) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator*(const Fq& s) const;

  Fq eval(const Fq& x) const;
  UPoly derivative() const;
  UPoly monic() const;  // errc::zero_input on 0

  std::string str() const;
};

/// f = q*g + r with deg r < deg g. errc::division_by_zero if g = 0.
void divrem(const UPoly& f, const UPoly& g, UPoly& q, UPoly& r);
UPoly operator%(const UPoly& f, const UPoly& g);
UPoly operator/(const UPoly& f, const UPoly& g);  // exact or truncating

/// Monic gcd.
UPoly gcd(UPoly a, UPoly b);

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m);
/// base^e mod m with e given as bits, most significant first.
UPoly powmod(const UPoly& base, const std::vector<bool>& ebits, const UPoly& m);
UPoly powmod_u64(const UPoly& base, std::uint64_t e, const UPoly& m);
/// x^(p^j) mod m by iterated powering; p from the context.
UPoly frobenius_power(const UPoly& xpoly, int j, const UPoly& m);

}  // namespace qline
