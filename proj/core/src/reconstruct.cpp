#include "scatfact/reconstruct.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scatfact/error.hpp"
#include "scatfact/spectrum.hpp"

namespace scatfact {

namespace {

constexpr Symbol A = Symbol::a;
constexpr Symbol B = Symbol::b;

BinaryWord blocks_word(std::initializer_list<std::pair<Symbol, std::size_t>> parts) {
  WordBuilder b;
  for (auto [s, n] : parts) b.add(s, n);
  return b.build();
}

}  // namespace

SpectrumOracle::SpectrumOracle(Membership membership, std::size_t query_length, bool balanced_only)
    : membership_(std::move(membership)), m_(query_length), balanced_only_(balanced_only) {}

bool SpectrumOracle::contains(const BinaryWord& u) {
  if (u.size() != m_)
    throw QueryRejected("query " + u.str() + " has length " + std::to_string(u.size()) +
                        ", oracle answers length " + std::to_string(m_));
  if (balanced_only_ && !balance(u).strictly_balanced)
    throw QueryRejected("query " + u.str() + " is not strictly balanced");
  ++count_;
  return membership_(u);
}

SpectrumOracle real_oracle(const BinaryWord& w, std::size_t m, bool balanced_only) {
  if (m > w.size()) throw RangeError("real_oracle: query length exceeds word length");
  return SpectrumOracle([w](const BinaryWord& u) { return is_scattered_factor(u, w); }, m,
                        balanced_only);
}

std::string_view method_name(ReconstructionMethod m) noexcept {
  return m == ReconstructionMethod::general ? "general" : "two-blocks";
}

ReconstructionResult reconstruct_general(SpectrumOracle& oracle, std::size_t k) {
  if (oracle.query_length() != k + 1)
    throw RangeError("reconstruct_general: oracle must answer queries of length k+1");
  if (oracle.balanced_only())
    throw RangeError("reconstruct_general: needs an unfiltered oracle");
  const std::size_t before = oracle.query_count();
  if (k == 0) return {BinaryWord{}, 0, ReconstructionMethod::general};

  // before_b[v]: some b has exactly v a's to its left; before_a symmetric.
  std::vector<bool> before_b(k + 1), before_a(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    before_b[i] = oracle.contains(blocks_word({{A, i}, {B, 1}, {A, k - i}}));
    before_a[i] = oracle.contains(blocks_word({{B, i}, {A, 1}, {B, k - i}}));
  }

  auto fail = [](const char* why) {
    throw ReconstructionError(std::string("reconstruct_general: oracle answers inconsistent: ") + why);
  };
  if (before_b[0] && before_a[0]) fail("word would start with both letters");

  // A b-block begins exactly when the a-count reaches a marked value, and an
  // a-block begins exactly when the b-count does.
  WordBuilder out;
  std::size_t ca = 0, cb = 0;
  std::optional<Symbol> last;
  while (ca < k || cb < k) {
    Symbol s;
    if (!last) s = before_b[0] ? B : A;
    else if (*last == A) s = before_b[ca] ? B : A;
    else s = before_a[cb] ? A : B;
    if (s == A) {
      if (ca == k) fail("too many a's");
      ++ca;
    } else {
      if (cb == k) fail("too many b's");
      ++cb;
    }
    out.add(s);
    last = s;
  }
  BinaryWord w = out.build();
  for (std::size_t i = 0; i <= k; ++i) {
    if (before_b[i] != is_scattered_factor(blocks_word({{A, i}, {B, 1}, {A, k - i}}), w) ||
        before_a[i] != is_scattered_factor(blocks_word({{B, i}, {A, 1}, {B, k - i}}), w))
      fail("no word matches every answer");
  }
  return {std::move(w), oracle.query_count() - before, ReconstructionMethod::general};
}

std::size_t two_block_query_length(std::size_t k) { return k % 2 ? k + 1 : k + 2; }

namespace {

struct Range {
  std::size_t lo, hi;
};

// Pattern a^{x1} b^{x2} a^{x3} b^{x4} a^{x5} with per-block ranges; only
// members with h a's and h b's are ever queried.
using Pattern = std::array<Range, 5>;

class TwoBlockSolver {
 public:
  TwoBlockSolver(SpectrumOracle& oracle, std::size_t k)
      : oracle_(oracle), k_(k), h_(two_block_query_length(k) / 2) {}

  ReconstructionResult solve();

 private:
  Range star() const { return {0, h_}; }
  Range plus() const { return {1, h_}; }
  static Range exact(std::size_t m) { return {m, m}; }

  bool ask(const BinaryWord& u) {
    auto it = memo_.find(u);
    if (it != memo_.end()) return it->second;
    bool r = oracle_.contains(u);
    memo_.emplace(u, r);
    return r;
  }

  bool exists(const Pattern& p) {
    for (std::size_t x1 = p[0].lo; x1 <= p[0].hi; ++x1)
      for (std::size_t x3 = p[2].lo; x3 <= p[2].hi && x1 + x3 <= h_; ++x3) {
        std::size_t x5 = h_ - x1 - x3;
        if (x5 < p[4].lo || x5 > p[4].hi) continue;
        for (std::size_t x2 = p[1].lo; x2 <= p[1].hi && x2 <= h_; ++x2) {
          std::size_t x4 = h_ - x2;
          if (x4 < p[3].lo || x4 > p[3].hi) continue;
          if (ask(blocks_word({{A, x1}, {B, x2}, {A, x3}, {B, x4}, {A, x5}}))) return true;
        }
      }
    return false;
  }

  // Largest m in [0, h] for which the pattern with block `idx` fixed to m
  // has a member in the spectrum (linear upward scan).
  std::size_t max_exponent(Pattern p, std::size_t idx) {
    std::optional<std::size_t> best;
    for (std::size_t m = 0; m <= h_; ++m) {
      if (m < p[idx].lo) continue;
      Pattern q = p;
      q[idx] = exact(m);
      if (exists(q)) best = m;
    }
    if (!best) fail("no exponent fits the answers");
    return *best;
  }

  [[noreturn]] static void fail(const std::string& why) {
    throw ReconstructionError("reconstruct_two_blocks: " + why);
  }

  BinaryWord finish(std::size_t i, std::size_t j, std::size_t l, std::size_t a3) {
    if (i + l + a3 != k_ || j > k_) fail("derived exponents do not form a word of length 2k");
    BinaryWord w = blocks_word({{A, i}, {B, j}, {A, l}, {B, k_ - j}, {A, a3}});
    for (const auto& [u, answer] : memo_)
      if (is_scattered_factor(u, w) != answer) fail("hidden word is not of the form a*b*a*b*a*");
    return w;
  }

  SpectrumOracle& oracle_;
  std::size_t k_, h_;
  std::map<BinaryWord, bool> memo_;
};

ReconstructionResult TwoBlockSolver::solve() {
  const std::size_t before = oracle_.query_count();
  auto result = [&](BinaryWord w) {
    return ReconstructionResult{std::move(w), oracle_.query_count() - before,
                                ReconstructionMethod::two_blocks};
  };
  if (k_ == 0) return result(BinaryWord{});
  const std::size_t h = h_, k = k_;

  // l = 0 (a single b-block) iff nothing of shape a*b+a+b+a* is present.
  if (!exists({star(), plus(), plus(), plus(), star()})) {
    std::size_t p;
    if (!ask(blocks_word({{A, h}, {B, h}}))) {
      p = max_exponent({star(), exact(h), star(), exact(0), exact(0)}, 0);
    } else {
      // p >= h, so the trailing block k-p is short; read it instead.
      p = k - max_exponent({star(), exact(h), star(), exact(0), exact(0)}, 2);
    }
    if (p > k) fail("leading block longer than k");
    return result(finish(p, k, 0, k - p));
  }

  std::size_t i, j, l, a3;
  if (exists({exact(0), plus(), exact(h), plus(), exact(0)})) {
    // l >= h: the outer a-blocks are both shorter than h and read off directly.
    i = max_exponent({star(), plus(), plus(), plus(), star()}, 0);
    a3 = max_exponent({star(), plus(), plus(), plus(), star()}, 4);
    if (i + a3 > k) fail("outer a-blocks exceed k");
    l = k - i - a3;
    if (ask(blocks_word({{A, h}, {B, h}}))) {
      j = max_exponent({exact(0), plus(), plus(), plus(), star()}, 1);
    } else {
      std::size_t kj = max_exponent({star(), plus(), plus(), plus(), exact(0)}, 3);
      if (kj > k) fail("b-block longer than k");
      j = k - kj;
    }
    return result(finish(i, j, l, a3));
  }

  // 0 < l < h.
  l = max_exponent({star(), plus(), star(), plus(), star()}, 2);
  if (l == 0 || l > k) fail("middle a-block out of range");
  const std::size_t m1 = max_exponent({star(), plus(), plus(), plus(), star()}, 0);
  const std::size_t m2 = max_exponent({star(), plus(), plus(), plus(), star()}, 4);
  if (m1 + 1 < h) {
    i = m1;
    if (i + l > k) fail("a-blocks exceed k");
    a3 = k - l - i;
  } else if (m2 + 1 < h) {
    a3 = m2;
    if (a3 + l > k) fail("a-blocks exceed k");
    i = k - l - a3;
  } else {
    if (k - l != 2 * (h - 1)) fail("outer a-blocks undetermined");
    i = a3 = h - 1;
  }

  const std::size_t n1 = max_exponent({star(), plus(), plus(), plus(), star()}, 1);
  const std::size_t n2 = max_exponent({star(), plus(), plus(), plus(), star()}, 3);
  if (n1 + 1 < h) {
    j = n1;
  } else if (n2 + 1 < h) {
    j = k - n2;
  } else if (k == 2 * (h - 1)) {
    j = h - 1;  // even k: both b-blocks equal
  } else {
    // Odd k: j is h-1 or h. One more balanced query separates them.
    if (a3 < h) {
      j = ask(blocks_word({{A, h - a3 - 1}, {B, h}, {A, a3 + 1}})) ? h : h - 1;
    } else {
      if (i + 1 > h) fail("leading a-block too long for tie break");
      j = ask(blocks_word({{A, i + 1}, {B, h}, {A, h - i - 1}})) ? h - 1 : h;
    }
  }
  return result(finish(i, j, l, a3));
}

}  // namespace

ReconstructionResult reconstruct_two_blocks(SpectrumOracle& oracle, std::size_t k) {
  if (oracle.query_length() != two_block_query_length(k))
    throw RangeError("reconstruct_two_blocks: oracle must answer queries of length " +
                     std::to_string(two_block_query_length(k)));
  return TwoBlockSolver(oracle, k).solve();
}

}  // namespace scatfact
