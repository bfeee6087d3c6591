#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace qline {

// 64-bit FNV-1a; used to derive content-addressed rng streams so that every
// randomized routine is reproducible independently of call order.
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t hash_begin() { return 0xcbf29ce484222325ull; }

inline std::uint64_t hash_seq(std::initializer_list<std::uint64_t> xs) {
  std::uint64_t h = hash_begin();
  for (auto x : xs) h = hash_mix(h, x);
  return h;
}

inline std::mt19937_64 seeded_rng(std::uint64_t h) { return std::mt19937_64(h); }

/// Bits of (p^L - 1) / 2, most significant first. p odd. Used as the
/// Cantor-Zassenhaus exponent without a general bignum type.
std::vector<bool> half_group_order_bits(std::uint64_t p, int L);

/// Bits of p^L - 1, most significant first.
std::vector<bool> group_order_bits(std::uint64_t p, int L);

}  // namespace qline
