#pragma once

#include <cstddef>
#include <string_view>

#include "scatfact/word.hpp"

namespace scatfact {

// Parametric word families. Comments give the literal shape.
enum class Family {
  ak_bk,             // a^k b^k
  gensquare,         // a^{k-i} b^k a^i,                i in [1, k/2]
  one_missing,       // (ab)^i a^2 b^2 (ab)^{k-i-2},    i in [0, k-2]
  lem2k_aba,         // a^{k-1} b a b^{k-1}
  lem2k_bka,         // a^{k-1} b^k a
  ab_power_a,        // (ab)^{k-c} a^c,                 c in [0, k]
  alternating,       // prefix of (ab)^omega of length n
  gensquare_bab,     // a^{k-2} b^j a b^{k-j} a,        j in [1, k-1]
  gensquare_baab,    // a^{k-2} b^j a^2 b^{k-j},        j in [1, k-1]
  gensquare_bbab,    // a^{k-1} b^2 a b^{k-2}
  nk_even,           // a^r b^r (a^d b^d)^i,            d = k/i, r = k - d*i
  nk_odd,            // a^r b^{r'} (a^d b^{d'})^{i-1} a^d, d' = k/(i-1), r' = k - d'(i-1)
  last_gap,          // a^2 b^2 (ab)^{k-3-i} ba (ab)^i, i in [0, k-3]
  theta,             // a b^{k-1} a^{k-1} b
};

struct FamilySpec {
  Family family;
  std::size_t k = 0;
  std::size_t c = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t n = 0;
};

// Builds the family word; throws RangeError naming the violated constraint.
BinaryWord family(const FamilySpec& spec);

std::string_view family_name(Family f) noexcept;

}  // namespace scatfact
