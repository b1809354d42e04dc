#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace scatfact {

enum class Symbol : std::uint8_t { a = 0, b = 1 };

constexpr Symbol complement(Symbol s) noexcept {
  return s == Symbol::a ? Symbol::b : Symbol::a;
}
constexpr char to_char(Symbol s) noexcept { return s == Symbol::a ? 'a' : 'b'; }

// Finite word over {a,b}. Symbols are packed MSB-first into 64-bit limbs,
// a -> 0 and b -> 1, so words up to 64 symbols live inline and longer words
// spill to the heap. Bits past size() are always zero.
class BinaryWord {
 public:
  using Limbs = boost::container::small_vector<std::uint64_t, 1>;
  static constexpr std::size_t kInlineCapacity = 64;
  // Hard ceiling for parse(); generous, but keeps malformed input bounded.
  static constexpr std::size_t kMaxLength = std::size_t{1} << 20;

  BinaryWord() = default;
  BinaryWord(std::initializer_list<Symbol> symbols);

  static BinaryWord parse(std::string_view text);
  // Word of the given length whose packed value is `index`
  // (leftmost symbol = most significant bit). Requires length <= 64.
  static BinaryWord from_index(std::uint64_t index, std::size_t length);
  static BinaryWord repeat(Symbol s, std::size_t count);

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }
  Symbol operator[](std::size_t i) const noexcept {
    return static_cast<Symbol>((limbs_[i >> 6] >> (63 - (i & 63))) & 1u);
  }
  std::size_t count(Symbol s) const noexcept;
  // Packed value; requires size() <= 64.
  std::uint64_t index() const;

  std::string str() const;
  BinaryWord prefix(std::size_t n) const;
  BinaryWord operator+(const BinaryWord& rhs) const;
  BinaryWord operator+(Symbol rhs) const;

  const Limbs& limbs() const noexcept { return limbs_; }

  friend bool operator==(const BinaryWord& x, const BinaryWord& y) noexcept {
    return x.len_ == y.len_ && x.limbs_ == y.limbs_;
  }
  // Lexicographic with a < b; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const BinaryWord& x, const BinaryWord& y) noexcept;

 private:
  friend class WordBuilder;
  void push_back(Symbol s);

  Limbs limbs_;
  std::size_t len_ = 0;
};

// Append-only helper for assembling words from pieces.
class WordBuilder {
 public:
  WordBuilder& add(Symbol s, std::size_t times = 1);
  WordBuilder& add(const BinaryWord& w, std::size_t times = 1);
  BinaryWord build() const { return word_; }

 private:
  BinaryWord word_;
};

BinaryWord pow(const BinaryWord& w, std::size_t times);

struct Run {
  Symbol symbol;
  std::size_t length;
  friend bool operator==(const Run&, const Run&) = default;
};

struct BlockDecomposition {
  std::vector<Run> runs;
  std::size_t blocks_of(Symbol s) const;
  BinaryWord expand() const;
};

struct BalanceClass {
  std::size_t c = 0;
  bool strictly_balanced = true;
};

BinaryWord reverse(const BinaryWord& w);
BinaryWord rename(const BinaryWord& w);
// Lexicographically least member of {w, w^R, rename(w), rename(w^R)}.
BinaryWord canonical(const BinaryWord& w);
bool is_canonical(const BinaryWord& w);
BlockDecomposition blocks(const BinaryWord& w);
BalanceClass balance(const BinaryWord& w);

// Prefix of (ab)^omega of length n.
BinaryWord alternating_prefix(std::size_t n);
bool is_alternating_prefix(const BinaryWord& w);

}  // namespace scatfact

template <>
struct std::hash<scatfact::BinaryWord> {
  std::size_t operator()(const scatfact::BinaryWord& w) const noexcept;
};
