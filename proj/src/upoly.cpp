#include "qline/upoly.hpp"

#include <sstream>

namespace qline {

UPoly UPoly::constant(const FieldCtx& ctx, const Fq& a) {
  UPoly r(ctx);
  if (!a.is_zero()) r.c.push_back(a);
  return r;
}

UPoly UPoly::x(const FieldCtx& ctx) {
  UPoly r(ctx);
  r.c = {Fq::zero(ctx), Fq::one(ctx)};
  return r;
}

UPoly UPoly::from_residues(const FieldCtx& ctx, const std::vector<std::uint64_t>& r) {
  UPoly f(ctx);
  for (auto v : r) f.c.push_back(Fq(ctx, v));
  f.trim();
  return f;
}

void UPoly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool UPoly::operator==(const UPoly& o) const { return c == o.c; }

bool UPoly::operator<(const UPoly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] != o.c[i]) return c[i] < o.c[i];
  }
  return false;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const FieldCtx& F = a.F ? *a.F : *b.F;
  UPoly r(F);
  r.c.resize(std::max(a.c.size(), b.c.size()), Fq::zero(F));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  const FieldCtx& F = a.F ? *a.F : *b.F;
  if (a.is_zero() || b.is_zero()) return UPoly::zero(F);
  UPoly r(F);
  r.c.assign(a.c.size() + b.c.size() - 1, Fq::zero(F));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

UPoly UPoly::operator*(const Fq& s) const {
  UPoly r = *this;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

Fq UPoly::eval(const Fq& x) const {
  Fq r = Fq::zero(*F);
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

UPoly UPoly::derivative() const {
  UPoly r(*F);
  for (size_t i = 1; i < c.size(); ++i) r.c.push_back(Fq(*F, i) * c[i]);
  r.trim();
  return r;
}

UPoly UPoly::monic() const {
  require(!is_zero(), errc::zero_input, "monic of zero polynomial");
  return *this * lc().inv();
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c[i].str();
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

void divrem(const UPoly& f, const UPoly& g, UPoly& q, UPoly& r) {
  require(!g.is_zero(), errc::division_by_zero, "division by zero polynomial");
  const FieldCtx& F = *g.F;
  q = UPoly::zero(F);
  r = f;
  if (f.is_zero() || f.deg() < g.deg()) return;
  q.c.assign(f.deg() - g.deg() + 1, Fq::zero(F));
  Fq inv_lc = g.lc().inv();
  while (!r.is_zero() && r.deg() >= g.deg()) {
    int d = r.deg() - g.deg();
    Fq coef = r.lc() * inv_lc;
    q.c[d] += coef;
    for (int i = 0; i <= g.deg(); ++i) r.c[d + i] -= coef * g.c[i];
    r.trim();
  }
  q.trim();
}

UPoly operator%(const UPoly& f, const UPoly& g) {
  UPoly q, r;
  divrem(f, g, q, r);
  return r;
}

UPoly operator/(const UPoly& f, const UPoly& g) {
  UPoly q, r;
  divrem(f, g, q, r);
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m) { return (a * b) % m; }

UPoly powmod(const UPoly& base, const std::vector<bool>& ebits, const UPoly& m) {
  const FieldCtx& F = *m.F;
  UPoly r = UPoly::constant(F, Fq::one(F)) % m;
  UPoly b = base % m;
  for (bool bit : ebits) {
    r = mulmod(r, r, m);
    if (bit) r = mulmod(r, b, m);
  }
  return r;
}

UPoly powmod_u64(const UPoly& base, std::uint64_t e, const UPoly& m) {
  std::vector<bool> bits;
  bool started = false;
  for (int i = 63; i >= 0; --i) {
    bool v = (e >> i) & 1;
    if (v) started = true;
    if (started) bits.push_back(v);
  }
  if (bits.empty()) bits.push_back(false);
  return powmod(base, bits, m);
}

UPoly frobenius_power(const UPoly& xpoly, int j, const UPoly& m) {
  UPoly r = xpoly % m;
  for (int i = 0; i < j; ++i) r = powmod_u64(r, m.F->p, m);
  return r;
}

}  // namespace qline
