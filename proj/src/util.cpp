#include "qline/util.hpp"

namespace qline {

namespace {

// p^L - maybe_half in base 2^32 limbs, little-endian.
std::vector<std::uint32_t> pow_minus_one_limbs(std::uint64_t p, int L) {
  std::vector<std::uint32_t> limbs{1};
  for (int i = 0; i < L; ++i) {
    std::uint64_t carry = 0;
    for (auto& w : limbs) {
      std::uint64_t t = (std::uint64_t)w * p + carry;
      w = (std::uint32_t)t;
      carry = t >> 32;
    }
    while (carry) {
      limbs.push_back((std::uint32_t)carry);
      carry >>= 32;
    }
  }
  // subtract 1 (p^L >= 1)
  for (auto& w : limbs) {
    if (w) {
      --w;
      break;
    }
    w = 0xffffffffu;
  }
  while (limbs.size() > 1 && limbs.back() == 0) limbs.pop_back();
  return limbs;
}

std::vector<bool> to_bits(std::vector<std::uint32_t> limbs, bool halve) {
  if (halve) {
    std::uint32_t carry = 0;
    for (size_t i = limbs.size(); i-- > 0;) {
      std::uint32_t nc = limbs[i] & 1;
      limbs[i] = (limbs[i] >> 1) | (carry << 31);
      carry = nc;
    }
  }
  std::vector<bool> bits;
  bool started = false;
  for (size_t i = limbs.size(); i-- > 0;) {
    for (int b = 31; b >= 0; --b) {
      bool v = (limbs[i] >> b) & 1;
      if (v) started = true;
      if (started) bits.push_back(v);
    }
  }
  if (bits.empty()) bits.push_back(false);
  return bits;
}

}  // namespace

std::vector<bool> half_group_order_bits(std::uint64_t p, int L) {
  return to_bits(pow_minus_one_limbs(p, L), true);
}

std::vector<bool> group_order_bits(std::uint64_t p, int L) {
  return to_bits(pow_minus_one_limbs(p, L), false);
}

}  // namespace qline
