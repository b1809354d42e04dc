#include "scatfact/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "scatfact/error.hpp"
#include "scatfact/family.hpp"
#include "scatfact/spectrum.hpp"

namespace scatfact {

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || n < r) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::int64_t t = 1; t <= r; ++t) {
    out *= n - r + t;
    out /= t;
  }
  return out;
}

namespace {

constexpr std::array<std::pair<FormulaId, std::string_view>, 11> kNames{{
    {FormulaId::alternating_prefix, "alternating-prefix"},
    {FormulaId::ab_power_a, "ab-power-a"},
    {FormulaId::min, "min"},
    {FormulaId::one_missing, "one-missing"},
    {FormulaId::gensquares1, "gensquares1"},
    {FormulaId::gensquares2, "gensquares2"},
    {FormulaId::gensquares3, "gensquares3"},
    {FormulaId::gensquares4, "gensquares4"},
    {FormulaId::square, "square"},
    {FormulaId::bounded_compositions, "bounded-compositions"},
    {FormulaId::strict_compositions, "strict-compositions"},
}};

std::int64_t s64(std::size_t v) { return static_cast<std::int64_t>(v); }

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag, FormulaId id) {
  if (!v)
    throw RangeError(std::string(formula_name(id)) + ": missing parameter " + flag);
  return *v;
}

// |SF_l| of the alternating prefix of length n, zero when l > n.
BigInt alternating_count(std::size_t n, std::size_t l) {
  if (l > n) return 0;
  BigInt sum = 0;
  for (std::size_t j = 0; j <= n - l; ++j) sum += binomial(s64(l), s64(n - l - j));
  return sum;
}

std::uint64_t count_compositions_direct(std::size_t k, std::size_t parts, std::size_t lo,
                                        std::size_t hi) {
  if (parts == 0) return k == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t r = lo; r <= hi && r <= k; ++r)
    total += count_compositions_direct(k - r, parts - 1, lo, hi);
  return total;
}

}  // namespace

std::string_view formula_name(FormulaId id) noexcept {
  for (auto& [f, name] : kNames)
    if (f == id) return name;
  return "?";
}

std::optional<FormulaId> parse_formula(std::string_view name) noexcept {
  for (auto& [f, n] : kNames)
    if (n == name) return f;
  return std::nullopt;
}

const std::vector<FormulaId>& all_formulas() {
  static const std::vector<FormulaId> ids = [] {
    std::vector<FormulaId> v;
    for (auto& [f, name] : kNames) v.push_back(f);
    return v;
  }();
  return ids;
}

std::string FormulaParams::str() const {
  std::ostringstream os;
  const char* sep = "";
  auto put = [&](const char* name, const std::optional<std::size_t>& v) {
    if (v) {
      os << sep << name << '=' << *v;
      sep = " ";
    }
  };
  put("k", k);
  put("c", c);
  put("i", i);
  put("j", j);
  put("n", n);
  return os.str();
}

BigInt card_alternating_prefix(std::size_t n, std::size_t l) {
  require(l <= n, "alternating-prefix: factor length l must not exceed n");
  return alternating_count(n, l);
}

BigInt card_ab_power_a(std::size_t k, std::size_t c, std::size_t i) {
  require(c <= k, "ab-power-a: c must satisfy c <= k");
  require(i <= k, "ab-power-a: i must satisfy i <= k");
  if (i <= k - c) return pow2(i);
  if (c == k) return 1;  // the word is a^k
  BigInt sum = pow2(k - c);
  const std::size_t inner_len = 2 * (k - c) - 1;  // (ab)^{k-c-1} a
  for (std::size_t j = 0; j + k + 1 <= i + c; ++j) sum += alternating_count(inner_len, i - j - 1);
  return sum;
}

MinCardinality card_min(std::size_t k, std::size_t c) {
  require(k >= 3, "min: k >= 3 required");
  require(c + 1 <= k, "min: c in [0, k-1] required");
  constexpr Symbol A = Symbol::a, B = Symbol::b;
  std::vector<BinaryWord> w{
      WordBuilder{}.add(A, k).add(B, k - c).build(),
      WordBuilder{}.add(A, k - c).add(B, k).build(),
      WordBuilder{}.add(B, k).add(A, k - c).build(),
      WordBuilder{}.add(B, k - c).add(A, k).build(),
  };
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return {BigInt(k - c + 1), std::move(w)};
}

OneMissing card_one_missing(std::size_t k, std::size_t i) {
  require(k >= 3, "one-missing: k >= 3 required");
  require(i + 2 <= k, "one-missing: i in [0, k-2] required");
  return {pow2(k) - 1,
          WordBuilder{}.add(Symbol::b, i + 1).add(Symbol::a, k - i - 1).build()};
}

BigInt card_gensquares(int variant, std::size_t k, std::size_t arg) {
  const BigInt K = k, X = arg;
  switch (variant) {
    case 1:
      require(k >= 4, "gensquares1: k >= 4 required");
      require(arg >= 1 && 2 * arg <= k, "gensquares1: i in [1, floor(k/2)] required");
      return K * (X + 1) - X * X + 1;
    case 2:
      require(k >= 2, "gensquares2: k >= 2 required");
      return 3 * K - 2;
    case 3:
      require(k >= 5, "gensquares3: k >= 5 required");
      require(arg >= 1 && arg + 1 <= k, "gensquares3: j in [1, k-1] required");
      return K * (2 * X + 2) - 6 * X + 2;
    case 4:
      require(k >= 2, "gensquares4: k >= 2 required");
      require(arg >= 1 && arg + 1 <= k, "gensquares4: j in [1, k-1] required");
      return K * (2 * X + 1) - 4 * X + 2;
    default:
      throw RangeError("gensquares: variant must be 1..4");
  }
}

BigInt card_square(std::size_t k) {
  require(k >= 4 && k % 2 == 0, "square: k must be even and >= 4");
  BigInt h = k / 2 + 1;
  return h * h;
}

BigInt bounded_compositions(std::size_t k, std::size_t parts, std::size_t bound) {
  if (parts == 0) return k == 0 ? 1 : 0;
  BigInt sum = 0;
  for (std::size_t j = 0; j <= parts; ++j) {
    BigInt term = binomial(s64(parts), s64(j)) *
                  binomial(s64(k) + s64(parts) - s64(j) * (s64(bound) + 1) - 1, s64(parts) - 1);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

BigInt strict_bounded_compositions(std::size_t k, std::size_t parts, std::size_t bound) {
  if (parts == 0) return k == 0 ? 1 : 0;
  if (bound == 0 || k < parts) return 0;
  return bounded_compositions(k - parts, parts, bound - 1);
}

RemarkInequality remark_inequality(std::size_t i, std::optional<std::size_t> k) {
  require(i >= 1, "remark: i >= 1 required");
  auto term = [i](std::size_t j) {
    BigInt base = BigInt(s64(i) - s64(j));
    BigInt t = binomial(s64(2 * i), s64(j)) * boost::multiprecision::pow(base, unsigned(2 * i - 1));
    return j % 2 ? BigInt(-t) : t;
  };
  // j < M  <=>  j (k+i) < i (k+2i-1)
  auto below_m = [&](std::size_t j) {
    if (!k) return i == 1 ? j < 1 : j <= i;
    return BigInt(j) * (*k + i) < BigInt(i) * (*k + 2 * i - 1);
  };
  RemarkInequality r{i, k, 0, 0};
  for (std::size_t j = 0; j <= 2 * i; ++j) {
    if (below_m(j)) r.sum_below_m += term(j);
    if (j < i) r.sum_below_i += term(j);
  }
  return r;
}

FormulaResult evaluate(FormulaId id, const FormulaParams& p) {
  FormulaResult r{0, id, p};
  switch (id) {
    case FormulaId::alternating_prefix:
      r.value = card_alternating_prefix(need(p.n, "--n", id), need(p.k, "--k", id));
      break;
    case FormulaId::ab_power_a:
      r.value = card_ab_power_a(need(p.k, "--k", id), need(p.c, "--c", id), need(p.i, "--i", id));
      break;
    case FormulaId::min: {
      std::size_t k = need(p.k, "--k", id), c = need(p.c, "--c", id);
      require(p.i.value_or(0) <= c, "min: i in [0, c] required");
      r.value = card_min(k, c).value;
      break;
    }
    case FormulaId::one_missing:
      r.value = card_one_missing(need(p.k, "--k", id), need(p.i, "--i", id)).value;
      break;
    case FormulaId::gensquares1:
      r.value = card_gensquares(1, need(p.k, "--k", id), need(p.i, "--i", id));
      break;
    case FormulaId::gensquares2:
      r.value = card_gensquares(2, need(p.k, "--k", id), 0);
      break;
    case FormulaId::gensquares3:
      r.value = card_gensquares(3, need(p.k, "--k", id), need(p.j, "--j", id));
      break;
    case FormulaId::gensquares4:
      r.value = card_gensquares(4, need(p.k, "--k", id), need(p.j, "--j", id));
      break;
    case FormulaId::square:
      r.value = card_square(need(p.k, "--k", id));
      break;
    case FormulaId::bounded_compositions:
      r.value = bounded_compositions(need(p.k, "--k", id), need(p.n, "--n", id),
                                     need(p.j, "--j", id));
      break;
    case FormulaId::strict_compositions:
      r.value = strict_bounded_compositions(need(p.k, "--k", id), need(p.n, "--n", id),
                                            need(p.j, "--j", id));
      break;
  }
  return r;
}

std::optional<OracleInstance> oracle_instance(FormulaId id, const FormulaParams& p) {
  evaluate(id, p);  // validates ranges and required parameters
  switch (id) {
    case FormulaId::alternating_prefix:
      return OracleInstance{alternating_prefix(*p.n), *p.k};
    case FormulaId::ab_power_a:
      return OracleInstance{family({.family = Family::ab_power_a, .k = *p.k, .c = *p.c}), *p.i};
    case FormulaId::min:
      return OracleInstance{card_min(*p.k, *p.c).witnesses.front(), *p.k - p.i.value_or(0)};
    case FormulaId::one_missing:
      return OracleInstance{family({.family = Family::one_missing, .k = *p.k, .i = *p.i}), *p.k};
    case FormulaId::gensquares1:
      return OracleInstance{family({.family = Family::gensquare, .k = *p.k, .i = *p.i}), *p.k};
    case FormulaId::gensquares2:
      return OracleInstance{family({.family = Family::gensquare_bbab, .k = *p.k}), *p.k};
    case FormulaId::gensquares3:
      return OracleInstance{family({.family = Family::gensquare_bab, .k = *p.k, .j = *p.j}), *p.k};
    case FormulaId::gensquares4:
      return OracleInstance{family({.family = Family::gensquare_baab, .k = *p.k, .j = *p.j}), *p.k};
    case FormulaId::square:
      return OracleInstance{family({.family = Family::gensquare, .k = *p.k, .i = *p.k / 2}), *p.k};
    case FormulaId::bounded_compositions:
    case FormulaId::strict_compositions:
      return std::nullopt;
  }
  return std::nullopt;
}

BigInt oracle_value(FormulaId id, const FormulaParams& p) {
  if (auto inst = oracle_instance(id, p)) return spectrum_cardinality(inst->word, inst->length);
  const std::size_t bound = *p.j;
  if (id == FormulaId::bounded_compositions)
    return count_compositions_direct(*p.k, *p.n, 0, bound);
  if (bound == 0) return (*p.k == 0 && *p.n == 0) ? 1 : 0;
  return count_compositions_direct(*p.k, *p.n, 1, bound);
}

}  // namespace scatfact
