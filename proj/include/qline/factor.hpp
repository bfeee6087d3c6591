#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qline/upoly.hpp"

namespace qline {

/// unit * prod(factors[i].first ^ factors[i].second) reproduces the input;
/// factors are monic irreducible, sorted canonically.
struct UFactorization {
  Fq unit;
  std::vector<std::pair<UPoly, int>> factors;
};

/// Pairwise-coprime monic squarefree parts with multiplicities (Yun-style
/// gcd chain). errc::degree_vs_characteristic if a p-th power part appears.
std::vector<std::pair<UPoly, int>> squarefree_decompose(const UPoly& f);

/// Complete factorization into monic irreducibles over the coefficient field;
/// deterministic for a fixed seed (randomness is derived from the input).
UFactorization factor_univariate(const UPoly& f, std::uint64_t seed);

/// Distinct roots of f lying in f's own coefficient field.
std::vector<Fq> all_roots_in_own_field(const UPoly& f, std::uint64_t salt);

/// Roots in the coefficient field, with multiplicities.
std::vector<std::pair<Fq, int>> roots_in_own_field(const UPoly& f, std::uint64_t salt);

/// All deg(f) roots over the algebraic closure. Each root is returned in the
/// canonical field F_{p^(m*e)} where m is the coefficient degree and e the
/// degree of its irreducible factor, so different roots may carry different
/// contexts. Sum of multiplicities equals deg f.
std::vector<std::pair<Fq, int>> all_roots(const Tower& tw, const UPoly& f,
                                          std::uint64_t salt);

/// Splitting field plus all roots of f embedded there; L is the lcm of the
/// irreducible-factor degrees times the coefficient degree.
struct SplitRoots {
  const FieldCtx* splitting = nullptr;
  std::vector<std::pair<Fq, int>> roots;
};
SplitRoots roots_in_splitting_field(const Tower& tw, const UPoly& f,
                                    std::uint64_t salt);

}  // namespace qline
