#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scatfact/bigint.hpp"
#include "scatfact/word.hpp"

namespace scatfact {

enum class FormulaId {
  alternating_prefix,    // |SF_l(prefix_n((ab)^w))|          params n, k (= l)
  ab_power_a,            // |SF_i((ab)^{k-c} a^c)|             params k, c, i
  min,                   // k-c+1 for |SF_{k-i}| of c-balanced  params k, c, [i]
  one_missing,           // 2^k - 1                            params k, i
  gensquares1,           // k(i+1) - i^2 + 1                   params k, i
  gensquares2,           // 3k - 2                             params k
  gensquares3,           // k(2j+2) - 6j + 2                   params k, j
  gensquares4,           // k(2j+1) - 4j + 2                   params k, j
  square,                // (k/2 + 1)^2                        params k
  bounded_compositions,  // weak compositions, parts <= bound  params k, n (parts), j (bound)
  strict_compositions,   // parts in [1, bound]                params k, n (parts), j (bound)
};

struct FormulaParams {
  std::optional<std::size_t> k, c, i, j, n;
  std::string str() const;
};

struct FormulaResult {
  BigInt value;
  FormulaId id;
  FormulaParams params;
};

std::string_view formula_name(FormulaId id) noexcept;
std::optional<FormulaId> parse_formula(std::string_view name) noexcept;
const std::vector<FormulaId>& all_formulas();

BigInt card_alternating_prefix(std::size_t n, std::size_t l);

// Uses the constant 2^{k-c}; the brute-force oracle rules out 1 + 2^{k-c}.
// For c = k the word is a^k and the value is 1.
BigInt card_ab_power_a(std::size_t k, std::size_t c, std::size_t i);

struct MinCardinality {
  BigInt value;
  std::vector<BinaryWord> witnesses;  // sorted, duplicates removed
};
MinCardinality card_min(std::size_t k, std::size_t c);

struct OneMissing {
  BigInt value;
  BinaryWord missing;
};
OneMissing card_one_missing(std::size_t k, std::size_t i);

// variant 1: a^{k-i} b^k a^i (arg = i); 2: a^{k-1} b^2 a b^{k-2} (arg ignored);
// 3: a^{k-2} b^j a b^{k-j} a (arg = j); 4: a^{k-2} b^j a^2 b^{k-j} (arg = j).
// Returns the stated value. Variants 3 and 4 are not correct for every j;
// the oracle comparison is left to callers.
BigInt card_gensquares(int variant, std::size_t k, std::size_t arg);

BigInt card_square(std::size_t k);

// Number of (r_1..r_parts) with each r_t in [0, bound] summing to k.
BigInt bounded_compositions(std::size_t k, std::size_t parts, std::size_t bound);
// Same with each r_t in [1, bound].
BigInt strict_bounded_compositions(std::size_t k, std::size_t parts, std::size_t bound);

struct RemarkInequality {
  std::size_t i;
  std::optional<std::size_t> k;  // set when M was evaluated at a concrete k
  BigInt sum_below_m;
  BigInt sum_below_i;
  bool below_m_positive() const { return sum_below_m > 0; }
  bool below_i_positive() const { return sum_below_i > 0; }
  bool holds() const { return below_m_positive() && below_i_positive(); }
};
// Evaluates sum_{0<=j<bound} (-1)^j C(2i,j) (i-j)^{2i-1} for bound = M and bound = i,
// where M = i(k+2i-1)/(k+i). Without k, M is taken at its k -> infinity limit,
// which for i >= 2 admits j = i (a zero term) and for i = 1 equals 1.
RemarkInequality remark_inequality(std::size_t i, std::optional<std::size_t> k = std::nullopt);

// Uniform dispatch used by the CLI and the acceptance harness.
FormulaResult evaluate(FormulaId id, const FormulaParams& p);

struct OracleInstance {
  BinaryWord word;
  std::size_t length;  // spectrum length to count
};
// The family word whose spectrum the formula describes; nullopt for the
// composition counts, which have no word.
std::optional<OracleInstance> oracle_instance(FormulaId id, const FormulaParams& p);
// Brute force: spectrum_cardinality of the oracle instance, or direct
// enumeration of compositions.
BigInt oracle_value(FormulaId id, const FormulaParams& p);

}  // namespace scatfact
