#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <mutex>
#include <string>
#include <vector>

#include "qline/errors.hpp"

namespace qline {

class Tower;

/// Description of F_{p^k}. Immutable after construction; plain data shared by
/// every element of the field. k = 1 is the prime field (empty modulus).
struct FieldCtx {
  std::uint64_t p = 0;
  int k = 1;
  // Monic irreducible of degree k over F_p, coefficients low-to-high,
  // modulus[k] == 1. Empty when k == 1.
  std::vector<std::uint64_t> modulus;
  std::uint64_t seed = 0;
  const Tower* tower = nullptr;

  int degree() const { return k; }
  bool prime_field() const { return k == 1; }
  bool operator==(const FieldCtx& o) const {
    return p == o.p && k == o.k && modulus == o.modulus;
  }
};

/// Element of F_{p^k}: coefficient vector of length k over residues mod p in
/// the power basis of the context's modulus.
class Fq {
 public:
  Fq() = default;
  Fq(const FieldCtx& F, std::uint64_t value);  // image of an integer
  static Fq from_vec(const FieldCtx& F, std::vector<std::uint64_t> coeffs);
  static Fq zero(const FieldCtx& F) { return Fq(F, 0); }
  static Fq one(const FieldCtx& F) { return Fq(F, 1); }
  /// x itself (requires k >= 2).
  static Fq gen(const FieldCtx& F);

  const FieldCtx& ctx() const { return *F_; }
  const std::vector<std::uint64_t>& vec() const { return a_; }
  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime subfield.
  bool in_prime_field() const;
  /// Residue value for prime-subfield elements.
  std::uint64_t as_residue() const;

  Fq operator-() const;
  Fq& operator+=(const Fq& o);
  Fq& operator-=(const Fq& o);
  Fq& operator*=(const Fq& o);
  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  bool operator==(const Fq& o) const;
  bool operator!=(const Fq& o) const { return !(*this == o); }
  /// Total order (coefficient vectors, low index first); deterministic
  /// tie-breaking everywhere.
  bool operator<(const Fq& o) const;

  Fq inv() const;  // errc::division_by_zero on 0
  Fq pow(std::uint64_t e) const;
  Fq frobenius() const { return pow_p(1); }
  Fq pow_p(int j) const;  // x -> x^{p^j}

  std::string str() const;

 private:
  const FieldCtx* F_ = nullptr;
  std::vector<std::uint64_t> a_;
};

inline Fq operator*(std::uint64_t c, const Fq& b) { return Fq(b.ctx(), c) * b; }

/// a * invert(a) = 1; extended gcd with the modulus.
Fq invert(const Fq& a);

bool is_prime_u64(std::uint64_t n);

/// Monic irreducible of degree d over F_p, deterministic for fixed seed.
/// Returned as residue coefficients low-to-high (size d+1, last entry 1).
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int d, std::uint64_t seed);

/// Owns the contexts F_{p^k} for one session (fixed p and seed) together with
/// the embedding cache. Extensions are direct extensions of F_p; elements of
/// different degrees are compared after embed() into a common field.
class Tower {
 public:
  /// errc::bad_characteristic unless p is prime and p != 2, 3.
  Tower(std::uint64_t p, std::uint64_t seed);
  Tower(const Tower&) = delete;
  Tower& operator=(const Tower&) = delete;

  std::uint64_t p() const { return p_; }
  std::uint64_t seed() const { return seed_; }

  const FieldCtx& base() const { return field(1); }
  /// F_{p^k}; modulus from find_irreducible, cached. k = 1 returns the base.
  const FieldCtx& field(int k) const;

  /// Image of a under the fixed embedding F_{p^d} -> F_{p^L}, d = a's degree,
  /// L = target degree. The embedding is chosen once per (d, L) by taking the
  /// first root (canonical order) of the degree-d modulus inside F_{p^L}.
  /// errc::no_embedding if d does not divide L.
  Fq embed(const Fq& a, const FieldCtx& target) const;

  /// Preimage of a under the fixed embedding target -> a's field, when a
  /// lies in the embedded copy of the target field; nullopt otherwise.
  std::optional<Fq> try_descend(const Fq& a, const FieldCtx& target) const;

 private:
  const std::vector<Fq>& root_powers(int d, int L) const;

  std::uint64_t p_, seed_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unique_ptr<FieldCtx>> fields_;
  mutable std::map<std::pair<int, int>, std::vector<Fq>> embeds_;
};

}  // namespace qline
