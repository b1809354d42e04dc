#include "scatfact/family.hpp"

#include <string>

#include "scatfact/error.hpp"

namespace scatfact {

namespace {

constexpr Symbol A = Symbol::a;
constexpr Symbol B = Symbol::b;

void require(bool ok, std::string_view fam, const char* constraint) {
  if (!ok) throw RangeError(std::string(fam) + ": parameter constraint violated: " + constraint);
}

const BinaryWord& ab() {
  static const BinaryWord w{A, B};
  return w;
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::ak_bk: return "a^k b^k";
    case Family::gensquare: return "a^{k-i} b^k a^i";
    case Family::one_missing: return "(ab)^i a^2 b^2 (ab)^{k-i-2}";
    case Family::lem2k_aba: return "a^{k-1} b a b^{k-1}";
    case Family::lem2k_bka: return "a^{k-1} b^k a";
    case Family::ab_power_a: return "(ab)^{k-c} a^c";
    case Family::alternating: return "prefix of (ab)^omega";
    case Family::gensquare_bab: return "a^{k-2} b^j a b^{k-j} a";
    case Family::gensquare_baab: return "a^{k-2} b^j a^2 b^{k-j}";
    case Family::gensquare_bbab: return "a^{k-1} b^2 a b^{k-2}";
    case Family::nk_even: return "a^r b^r (a^d b^d)^i";
    case Family::nk_odd: return "a^r b^{r'} (a^d b^{d'})^{i-1} a^d";
    case Family::last_gap: return "a^2 b^2 (ab)^{k-3-i} ba (ab)^i";
    case Family::theta: return "a b^{k-1} a^{k-1} b";
  }
  return "?";
}

BinaryWord family(const FamilySpec& s) {
  const auto name = family_name(s.family);
  const std::size_t k = s.k;
  WordBuilder w;
  switch (s.family) {
    case Family::ak_bk:
      return w.add(A, k).add(B, k).build();
    case Family::gensquare:
      require(s.i >= 1, name, "i >= 1");
      require(2 * s.i <= k, name, "i <= floor(k/2)");
      return w.add(A, k - s.i).add(B, k).add(A, s.i).build();
    case Family::one_missing:
      require(k >= 2, name, "k >= 2");
      require(s.i <= k - 2, name, "i <= k-2");
      return w.add(ab(), s.i).add(A, 2).add(B, 2).add(ab(), k - s.i - 2).build();
    case Family::lem2k_aba:
      require(k >= 1, name, "k >= 1");
      return w.add(A, k - 1).add(B).add(A).add(B, k - 1).build();
    case Family::lem2k_bka:
      require(k >= 1, name, "k >= 1");
      return w.add(A, k - 1).add(B, k).add(A).build();
    case Family::ab_power_a:
      require(s.c <= k, name, "c <= k");
      return w.add(ab(), k - s.c).add(A, s.c).build();
    case Family::alternating:
      return alternating_prefix(s.n);
    case Family::gensquare_bab:
      require(k >= 2, name, "k >= 2");
      require(s.j >= 1 && s.j <= k - 1, name, "j in [1, k-1]");
      return w.add(A, k - 2).add(B, s.j).add(A).add(B, k - s.j).add(A).build();
    case Family::gensquare_baab:
      require(k >= 2, name, "k >= 2");
      require(s.j >= 1 && s.j <= k - 1, name, "j in [1, k-1]");
      return w.add(A, k - 2).add(B, s.j).add(A, 2).add(B, k - s.j).build();
    case Family::gensquare_bbab:
      require(k >= 2, name, "k >= 2");
      return w.add(A, k - 1).add(B, 2).add(A).add(B, k - 2).build();
    case Family::nk_even: {
      require(s.i >= 2, name, "i >= 2");
      require(k >= s.i, name, "k >= i");
      std::size_t d = k / s.i, r = k - d * s.i;
      w.add(A, r).add(B, r);
      for (std::size_t t = 0; t < s.i; ++t) w.add(A, d).add(B, d);
      return w.build();
    }
    case Family::nk_odd: {
      require(s.i >= 2, name, "i >= 2");
      require(k >= s.i, name, "k >= i");
      std::size_t d = k / s.i, r = k - d * s.i;
      std::size_t d2 = k / (s.i - 1), r2 = k - d2 * (s.i - 1);
      w.add(A, r).add(B, r2);
      for (std::size_t t = 0; t + 1 < s.i; ++t) w.add(A, d).add(B, d2);
      return w.add(A, d).build();
    }
    case Family::last_gap:
      require(k >= 3, name, "k >= 3");
      require(s.i + 3 <= k, name, "i <= k-3 (exponent k-3-i must be nonnegative)");
      return w.add(A, 2).add(B, 2).add(ab(), k - 3 - s.i).add(B).add(A).add(ab(), s.i).build();
    case Family::theta:
      require(k >= 1, name, "k >= 1");
      return w.add(A).add(B, k - 1).add(A, k - 1).add(B).build();
  }
  throw RangeError("unknown family");
}

}  // namespace scatfact
