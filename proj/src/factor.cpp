#include "qline/factor.hpp"
#include <numeric>

#include <algorithm>

#include "qline/util.hpp"

namespace qline {

namespace {

std::uint64_t upoly_hash(const UPoly& f, std::uint64_t salt) {
  std::uint64_t h = hash_begin();
  h = hash_mix(h, salt);
  h = hash_mix(h, f.F->p);
  h = hash_mix(h, (std::uint64_t)f.F->k);
  for (auto m : f.F->modulus) h = hash_mix(h, m);
  for (const auto& c : f.c)
    for (auto v : c.vec()) h = hash_mix(h, v);
  return h;
}

Fq random_elt(const FieldCtx& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.p - 1);
  std::vector<std::uint64_t> v(F.k);
  for (auto& x : v) x = dist(rng);
  return Fq::from_vec(F, std::move(v));
}

UPoly random_upoly(const FieldCtx& F, int max_deg, std::mt19937_64& rng) {
  std::vector<Fq> c;
  for (int i = 0; i < max_deg; ++i) c.push_back(random_elt(F, rng));
  return UPoly(F, std::move(c));
}

// g = monic product of distinct linear factors over its own field.
void cz_linear_roots(const UPoly& g, std::mt19937_64& rng,
                     const std::vector<bool>& half_bits, std::vector<Fq>& out) {
  const FieldCtx& F = *g.F;
  if (g.deg() <= 0) return;
  if (g.deg() == 1) {
    out.push_back(-g.c[0]);
    return;
  }
  for (;;) {
    UPoly shift = UPoly::x(F) + UPoly::constant(F, random_elt(F, rng));
    UPoly h = powmod(shift, half_bits, g) - UPoly::constant(F, Fq::one(F));
    UPoly d = gcd(h, g);
    if (d.deg() > 0 && d.deg() < g.deg()) {
      cz_linear_roots(d, rng, half_bits, out);
      cz_linear_roots(g / d, rng, half_bits, out);
      return;
    }
  }
}

// f monic squarefree: split into irreducibles of known degree d (deg f is a
// multiple of d) by Cantor-Zassenhaus.
void cz_equal_degree(const UPoly& f, int d, std::mt19937_64& rng,
                     const std::vector<bool>& half_bits, std::vector<UPoly>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  const FieldCtx& F = *f.F;
  for (;;) {
    UPoly r = random_upoly(F, f.deg(), rng);
    if (r.deg() < 1) continue;
    UPoly h = powmod(r, half_bits, f) - UPoly::constant(F, Fq::one(F));
    UPoly g = gcd(h, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      cz_equal_degree(g, d, rng, half_bits, out);
      cz_equal_degree(f / g, d, rng, half_bits, out);
      return;
    }
  }
}

// Distinct-degree decomposition of a monic squarefree polynomial.
std::vector<std::pair<UPoly, int>> ddf(const UPoly& f) {
  const FieldCtx& F = *f.F;
  std::vector<std::pair<UPoly, int>> out;
  UPoly fs = f;
  UPoly h = UPoly::x(F) % fs;
  for (int d = 1; 2 * d <= fs.deg(); ++d) {
    h = frobenius_power(h, F.k, fs);  // h := h^{q} mod fs, so h = x^{q^d}
    UPoly g = gcd(h - UPoly::x(F), fs);
    if (g.deg() > 0) {
      out.push_back({g.monic(), d});
      fs = fs / g;
      if (fs.deg() == 0) break;
      h = h % fs;
    }
  }
  if (fs.deg() > 0) out.push_back({fs.monic(), fs.deg()});
  return out;
}

}  // namespace

std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& f) {
  require(!f.is_zero(), errc::zero_input, "squarefree decomposition of 0");
  std::vector<std::pair<UPoly, int>> out;
  if (f.deg() == 0) return out;
  UPoly fm = f.monic();
  UPoly fp = fm.derivative();
  if (fp.is_zero())
    fail(errc::degree_vs_characteristic, "derivative vanishes: p-th power input");
  UPoly c = gcd(fm, fp);
  UPoly w = fm / c;
  int i = 1;
  while (w.deg() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = w / y;
    if (z.deg() > 0) out.push_back({z.monic(), i});
    c = c / y;
    w = std::move(y);
    ++i;
  }
  if (c.deg() > 0)
    fail(errc::degree_vs_characteristic, "p-th power factor beyond gcd chain");
  return out;
}

UFactorization factor_univariate(const UPoly& f, std::uint64_t seed) {
  require(!f.is_zero(), errc::zero_input, "factorization of 0");
  const FieldCtx& F = *f.F;
  UFactorization out;
  out.unit = f.lc();
  if (f.deg() == 0) return out;
  auto rng = seeded_rng(upoly_hash(f, hash_seq({0xfac7, seed})));
  auto half_bits_cache = std::vector<std::vector<bool>>();
  auto half_bits_for = [&](int d) -> const std::vector<bool>& {
    if ((int)half_bits_cache.size() < d + 1) half_bits_cache.resize(d + 1);
    if (half_bits_cache[d].empty())
      half_bits_cache[d] = half_group_order_bits(F.p, F.k * d);
    return half_bits_cache[d];
  };
  for (auto& [part, mult] : squarefree_decompose(f)) {
    for (auto& [prod, d] : ddf(part)) {
      std::vector<UPoly> irred;
      cz_equal_degree(prod, d, rng, half_bits_for(d), irred);
      for (auto& g : irred) out.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (!(a.first == b.first)) return a.first < b.first;
              return a.second < b.second;
            });
  return out;
}

std::vector<Fq> all_roots_in_own_field(const UPoly& f, std::uint64_t salt) {
  require(!f.is_zero(), errc::zero_input, "roots of 0");
  const FieldCtx& F = *f.F;
  std::vector<Fq> out;
  if (f.deg() == 0) return out;
  // isolate the part splitting over F: gcd(x^q - x, f)
  UPoly xq = frobenius_power(UPoly::x(F), F.k, f);
  UPoly lin = gcd(xq - UPoly::x(F), f);
  if (lin.deg() <= 0) return out;
  auto rng = seeded_rng(upoly_hash(f, hash_seq({0x2007, salt})));
  auto half_bits = half_group_order_bits(F.p, F.k);
  cz_linear_roots(lin, rng, half_bits, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Fq, int>> roots_in_own_field(const UPoly& f, std::uint64_t salt) {
  std::vector<std::pair<Fq, int>> out;
  for (auto& [part, mult] : squarefree_decompose(f)) {
    for (auto& r : all_roots_in_own_field(part, salt)) out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<Fq, int>> all_roots(const Tower& tw, const UPoly& f,
                                          std::uint64_t salt) {
  require(!f.is_zero(), errc::zero_input, "roots of 0");
  const FieldCtx& K = *f.F;
  std::vector<std::pair<Fq, int>> out;
  auto fac = factor_univariate(f, hash_seq({tw.seed(), salt}));
  for (auto& [g, mult] : fac.factors) {
    int e = g.deg();
    const FieldCtx& M = tw.field(K.k * e);
    std::vector<Fq> lifted;
    for (const auto& c : g.c) lifted.push_back(tw.embed(c, M));
    UPoly gm(M, std::move(lifted));
    auto roots = all_roots_in_own_field(gm, salt);
    require((int)roots.size() == e, errc::internal, "factor failed to split");
    for (auto& r : roots) out.push_back({r, mult});
  }
  return out;
}

SplitRoots roots_in_splitting_field(const Tower& tw, const UPoly& f,
                                    std::uint64_t salt) {
  auto roots = all_roots(tw, f, salt);
  int L = 1;
  for (auto& [r, m] : roots) L = std::lcm(L, r.ctx().k);
  SplitRoots out;
  out.splitting = &tw.field(L);
  for (auto& [r, m] : roots) out.roots.push_back({tw.embed(r, *out.splitting), m});
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace qline
