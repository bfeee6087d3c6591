#include "qline/galois.hpp"

#include <algorithm>
#include <sstream>

#include "qline/factor.hpp"
#include "qline/upoly.hpp"
#include "qline/util.hpp"

namespace qline {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (std::uint64_t)((unsigned __int128)a * b % m);
}

std::uint64_t powmod_u64i(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  require(a % p != 0, errc::division_by_zero, "inverse of 0 mod p");
  // extended Euclid
  std::int64_t t = 0, newt = 1;
  std::int64_t r = (std::int64_t)p, newr = (std::int64_t)(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += (std::int64_t)p;
  return (std::uint64_t)t;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // deterministic Miller-Rabin for 64-bit
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64i(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Fq

Fq::Fq(const FieldCtx& F, std::uint64_t value) : F_(&F), a_(F.k, 0) {
  a_[0] = value % F.p;
}

Fq Fq::from_vec(const FieldCtx& F, std::vector<std::uint64_t> coeffs) {
  require((int)coeffs.size() == F.k, errc::internal, "coefficient vector length");
  Fq r;
  r.F_ = &F;
  for (auto& x : coeffs) x %= F.p;
  r.a_ = std::move(coeffs);
  return r;
}

Fq Fq::gen(const FieldCtx& F) {
  require(F.k >= 2, errc::internal, "generator needs an extension field");
  Fq r(F, 0);
  r.a_[1] = 1;
  return r;
}

bool Fq::is_zero() const {
  for (auto x : a_)
    if (x) return false;
  return true;
}

bool Fq::is_one() const {
  if (a_.empty() || a_[0] != 1) return false;
  for (size_t i = 1; i < a_.size(); ++i)
    if (a_[i]) return false;
  return true;
}

bool Fq::in_prime_field() const {
  for (size_t i = 1; i < a_.size(); ++i)
    if (a_[i]) return false;
  return true;
}

std::uint64_t Fq::as_residue() const {
  require(in_prime_field(), errc::internal, "not a prime-field element");
  return a_.empty() ? 0 : a_[0];
}

Fq Fq::operator-() const {
  Fq r = *this;
  for (auto& x : r.a_)
    if (x) x = F_->p - x;
  return r;
}

Fq& Fq::operator+=(const Fq& o) {
  require(F_ == o.F_ || *F_ == *o.F_, errc::ctx_mismatch, "Fq add");
  for (int i = 0; i < F_->k; ++i) {
    a_[i] += o.a_[i];
    if (a_[i] >= F_->p) a_[i] -= F_->p;
  }
  return *this;
}

Fq& Fq::operator-=(const Fq& o) {
  require(F_ == o.F_ || *F_ == *o.F_, errc::ctx_mismatch, "Fq sub");
  for (int i = 0; i < F_->k; ++i) {
    a_[i] = (a_[i] >= o.a_[i]) ? a_[i] - o.a_[i] : a_[i] + F_->p - o.a_[i];
  }
  return *this;
}

Fq& Fq::operator*=(const Fq& o) {
  require(F_ == o.F_ || *F_ == *o.F_, errc::ctx_mismatch, "Fq mul");
  const int k = F_->k;
  const std::uint64_t p = F_->p;
  if (k == 1) {
    a_[0] = mulmod_u64(a_[0], o.a_[0], p);
    return *this;
  }
  std::vector<unsigned __int128> conv(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (!a_[i]) continue;
    for (int j = 0; j < k; ++j) conv[i + j] += (unsigned __int128)a_[i] * o.a_[j];
  }
  // reduce by the monic modulus: x^k = -(m_0 + ... + m_{k-1} x^{k-1})
  const auto& m = F_->modulus;
  for (int d = 2 * k - 2; d >= k; --d) {
    std::uint64_t lead = (std::uint64_t)(conv[d] % p);
    if (!lead) continue;
    std::uint64_t neg = p - lead;
    for (int j = 0; j < k; ++j) {
      if (m[j]) conv[d - k + j] += (unsigned __int128)neg * m[j];
    }
  }
  for (int i = 0; i < k; ++i) a_[i] = (std::uint64_t)(conv[i] % p);
  return *this;
}

bool Fq::operator==(const Fq& o) const { return a_ == o.a_ && *F_ == *o.F_; }

bool Fq::operator<(const Fq& o) const { return a_ < o.a_; }

Fq Fq::inv() const { return invert(*this); }

Fq Fq::pow(std::uint64_t e) const {
  Fq r = Fq::one(*F_);
  Fq b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Fq Fq::pow_p(int j) const {
  Fq r = *this;
  for (int i = 0; i < j; ++i) r = r.pow(F_->p);
  return r;
}

std::string Fq::str() const {
  if (F_->k == 1) return std::to_string(a_[0]);
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < F_->k; ++i) {
    if (i) os << ',';
    os << a_[i];
  }
  os << ']';
  return os.str();
}

Fq invert(const Fq& a) {
  require(!a.is_zero(), errc::division_by_zero, "invert(0)");
  const FieldCtx& F = a.ctx();
  if (F.k == 1) {
    Fq r(F, inv_mod_p(a.vec()[0], F.p));
    return r;
  }
  // extended Euclid in F_p[y] against the modulus
  const Tower* tw = F.tower;
  require(tw != nullptr, errc::internal, "context without tower");
  const FieldCtx& P = tw->base();
  std::vector<Fq> rv, mv;
  for (auto x : a.vec()) rv.push_back(Fq(P, x));
  for (auto x : F.modulus) mv.push_back(Fq(P, x));
  UPoly r0(P, mv), r1(P, rv);
  UPoly t0 = UPoly::zero(P), t1 = UPoly::constant(P, Fq::one(P));
  while (!r1.is_zero()) {
    UPoly q, rem;
    divrem(r0, r1, q, rem);
    UPoly tn = t0 - q * t1;
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = tn;
  }
  // r0 = gcd (a unit since modulus is irreducible and a != 0)
  require(r0.deg() == 0, errc::internal, "modulus not coprime to element");
  UPoly t = t0 * r0.lc().inv();
  std::vector<std::uint64_t> out(F.k, 0);
  for (int i = 0; i <= t.deg(); ++i) out[i] = t[i].as_residue();
  return Fq::from_vec(F, out);
}

// ------------------------------------------------- irreducible search

namespace {

bool is_irreducible_over_fp(const UPoly& f) {
  // f monic of degree d over F_p: irreducible iff x^{p^d} = x mod f and
  // gcd(x^{p^{d/l}} - x, f) = 1 for every prime l | d.
  const FieldCtx& P = *f.F;
  int d = f.deg();
  if (d == 1) return true;
  UPoly x = UPoly::x(P);
  UPoly xp = frobenius_power(x, d, f);
  if (!((xp - x) % f).is_zero()) return false;
  int rem = d;
  for (int l = 2; l <= rem; ++l) {
    if (rem % l) continue;
    UPoly xl = frobenius_power(x, d / l, f);
    if (gcd(xl - x, f).deg() != 0) return false;
    while (rem % l == 0) rem /= l;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int d, std::uint64_t seed) {
  require(d >= 1, errc::internal, "degree must be positive");
  FieldCtx P;
  P.p = p;
  P.k = 1;
  P.seed = seed;
  auto rng = seeded_rng(hash_seq({0x1e5e, p, (std::uint64_t)d, seed}));
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    std::vector<Fq> c(d + 1, Fq::zero(P));
    for (int i = 0; i < d; ++i) c[i] = Fq(P, coeff(rng));
    c[d] = Fq::one(P);
    UPoly f(P, c);
    if (f.deg() != d) continue;
    if (is_irreducible_over_fp(f)) {
      std::vector<std::uint64_t> out(d + 1);
      for (int i = 0; i <= d; ++i) out[i] = f[i].as_residue();
      return out;
    }
  }
}

// ---------------------------------------------------------------- Tower

Tower::Tower(std::uint64_t p, std::uint64_t seed) : p_(p), seed_(seed) {
  require(p != 2 && p != 3, errc::bad_characteristic, "characteristic 2 and 3 excluded");
  require(is_prime_u64(p), errc::bad_characteristic, "p must be prime");
  require(p < (1ull << 31), errc::bad_characteristic, "p must fit in 31 bits");
}

const FieldCtx& Tower::field(int k) const {
  require(k >= 1, errc::internal, "extension degree must be positive");
  std::lock_guard<std::mutex> lk(mu_);
  auto it = fields_.find(k);
  if (it != fields_.end()) return *it->second;
  auto ctx = std::make_unique<FieldCtx>();
  ctx->p = p_;
  ctx->k = k;
  ctx->seed = seed_;
  ctx->tower = this;
  if (k > 1) ctx->modulus = find_irreducible(p_, k, seed_);
  auto& ref = *ctx;
  fields_.emplace(k, std::move(ctx));
  return ref;
}

const std::vector<Fq>& Tower::root_powers(int d, int L) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = embeds_.find({d, L});
    if (it != embeds_.end()) return it->second;
  }
  const FieldCtx& big = field(L);
  const FieldCtx& small = field(d);
  // Lift the degree-d modulus to F_{p^L} (prime-field coefficients embed as
  // constants) and take its canonically first root.
  std::vector<Fq> coeffs;
  for (auto r : small.modulus) coeffs.push_back(Fq(big, r));
  UPoly mod_lifted(big, coeffs);
  auto roots = all_roots_in_own_field(mod_lifted, hash_seq({0xe3bed, p_, seed_,
                                                            (std::uint64_t)d,
                                                            (std::uint64_t)L}));
  require(!roots.empty(), errc::internal, "modulus has no root in the big field");
  std::sort(roots.begin(), roots.end());
  Fq rho = roots.front();
  std::vector<Fq> powers(d, Fq::one(big));
  for (int i = 1; i < d; ++i) powers[i] = powers[i - 1] * rho;
  std::lock_guard<std::mutex> lk(mu_);
  auto [it, inserted] = embeds_.emplace(std::make_pair(d, L), std::move(powers));
  return it->second;
}

Fq Tower::embed(const Fq& a, const FieldCtx& target) const {
  int d = a.ctx().k;
  int L = target.k;
  if (d == L) return a;
  require(L % d == 0, errc::no_embedding, "source degree does not divide target degree");
  if (d == 1) {
    return Fq(target, a.vec()[0]);
  }
  const auto& powers = root_powers(d, L);
  Fq out = Fq::zero(target);
  for (int i = 0; i < d; ++i) {
    std::uint64_t ai = a.vec()[i];
    if (ai) out += Fq(target, ai) * powers[i];
  }
  return out;
}

std::optional<Fq> Tower::try_descend(const Fq& a, const FieldCtx& target) const {
  int D = a.ctx().k;
  int g = target.k;
  if (g == D) return a;
  require(D % g == 0, errc::no_embedding, "target degree does not divide source");
  if (g == 1) {
    if (!a.in_prime_field()) return std::nullopt;
    return Fq(target, a.vec()[0]);
  }
  const auto& powers = root_powers(g, D);
  // solve sum_i c_i rho^i = a over F_p
  int rows = D, cols = g;
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols + 1, 0));
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m[i][j] = powers[j].vec()[i];
  for (int i = 0; i < rows; ++i) m[i][cols] = a.vec()[i];
  // Gaussian elimination over F_p
  std::uint64_t p = p_;
  int rank = 0;
  std::vector<int> pivot_of_col(cols, -1);
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = Fq(base(), m[rank][col]).inv().vec()[0];
    for (int c = col; c <= cols; ++c) m[rank][c] = m[rank][c] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      std::uint64_t f = m[r][col];
      for (int c = col; c <= cols; ++c)
        m[r][c] = (m[r][c] + (p - f) * m[rank][c]) % p;
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<std::uint64_t> sol(cols, 0);
  for (int col = 0; col < cols; ++col) {
    if (pivot_of_col[col] < 0) return std::nullopt;  // cannot happen: injective
    sol[col] = m[pivot_of_col[col]][cols];
  }
  // consistency of the remaining rows
  for (int r = rank; r < rows; ++r)
    if (m[r][cols] % p != 0) return std::nullopt;
  Fq out = Fq::from_vec(target, sol);
  // exactness check
  if (!(embed(out, a.ctx()) == a)) return std::nullopt;
  return out;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_characteristic: return "BadCharacteristic";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::no_embedding: return "NoEmbedding";
    case errc::ctx_mismatch: return "CtxMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::zero_input: return "ZeroInput";
    case errc::degree_vs_characteristic: return "DegreeVsCharacteristic";
    case errc::line_not_on_surface: return "LineNotOnSurface";
    case errc::degenerate_line: return "DegenerateLine";
    case errc::identically_zero: return "IdenticallyZero";
    case errc::wronskian_zero: return "WronskianZero";
    case errc::unexpected_pattern: return "UnexpectedPattern";
    case errc::singular_surface: return "SingularSurface";
    case errc::not_cubic: return "NotCubic";
    case errc::plane_not_component: return "PlaneNotComponent";
    case errc::plane_misses_line: return "PlaneMissesLine";
    case errc::coincident_planes: return "CoincidentPlanes";
    case errc::ruled_singular_on_line: return "RuledSingularOnLine";
    case errc::not_decomposable: return "NotDecomposable";
    case errc::residual_not_quartic: return "ResidualNotQuartic";
    case errc::identity_failed: return "IdentityFailed";
    case errc::not_second_kind: return "NotSecondKind";
    case errc::too_few_smooth_fibers: return "TooFewSmoothFibers";
    case errc::c_zero: return "CZero";
    case errc::parse_error: return "ParseError";
    case errc::elimination_degenerate: return "EliminationDegenerate";
    case errc::not_quartic: return "NotQuartic";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace qline
