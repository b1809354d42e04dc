#include "scatfact/word.hpp"

#include <algorithm>
#include <bit>

#include <boost/container_hash/hash.hpp>

#include "scatfact/error.hpp"

namespace scatfact {

namespace {

std::uint64_t reverse_bits(std::uint64_t x) noexcept {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  return __builtin_bswap64(x);
}

std::uint64_t low_mask(std::size_t bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

}  // namespace

BinaryWord::BinaryWord(std::initializer_list<Symbol> symbols) {
  for (Symbol s : symbols) push_back(s);
}

void BinaryWord::push_back(Symbol s) {
  if ((len_ & 63) == 0) limbs_.push_back(0);
  if (s == Symbol::b) limbs_.back() |= std::uint64_t{1} << (63 - (len_ & 63));
  ++len_;
}

BinaryWord BinaryWord::parse(std::string_view text) {
  if (text.size() > kMaxLength)
    throw ParseError("word longer than " + std::to_string(kMaxLength) + " symbols", kMaxLength + 1);
  BinaryWord w;
  w.limbs_.reserve((text.size() + 63) / 64);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch != 'a' && ch != 'b')
      throw ParseError("invalid symbol '" + std::string(1, ch) + "' at position " +
                           std::to_string(i + 1) + " (expected 'a' or 'b')",
                       i + 1);
    w.push_back(ch == 'a' ? Symbol::a : Symbol::b);
  }
  return w;
}

BinaryWord BinaryWord::from_index(std::uint64_t index, std::size_t length) {
  if (length > 64) throw RangeError("from_index: length exceeds 64");
  BinaryWord w;
  w.len_ = length;
  if (length == 0) return w;
  if (length < 64 && (index >> length) != 0)
    throw RangeError("from_index: index does not fit in the given length");
  w.limbs_.push_back(index << (64 - length));
  return w;
}

BinaryWord BinaryWord::repeat(Symbol s, std::size_t count) {
  BinaryWord w;
  w.len_ = count;
  std::size_t full = count / 64, rest = count % 64;
  std::uint64_t fill = s == Symbol::b ? ~std::uint64_t{0} : 0;
  w.limbs_.assign(full, fill);
  if (rest) w.limbs_.push_back(fill & ~low_mask(64 - rest));
  return w;
}

std::size_t BinaryWord::count(Symbol s) const noexcept {
  std::size_t ones = 0;
  for (auto limb : limbs_) ones += static_cast<std::size_t>(std::popcount(limb));
  return s == Symbol::b ? ones : len_ - ones;
}

std::uint64_t BinaryWord::index() const {
  if (len_ > 64) throw RangeError("index: word longer than 64 symbols");
  if (len_ == 0) return 0;
  return limbs_[0] >> (64 - len_);
}

std::string BinaryWord::str() const {
  std::string out(len_, 'a');
  for (std::size_t i = 0; i < len_; ++i) out[i] = to_char((*this)[i]);
  return out;
}

BinaryWord BinaryWord::prefix(std::size_t n) const {
  n = std::min(n, len_);
  BinaryWord w;
  w.len_ = n;
  w.limbs_.assign(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>((n + 63) / 64));
  if (n % 64) w.limbs_.back() &= ~low_mask(64 - n % 64);
  return w;
}

BinaryWord BinaryWord::operator+(const BinaryWord& rhs) const {
  BinaryWord w = *this;
  if ((w.len_ & 63) == 0) {
    // Limb aligned: splice directly.
    w.limbs_.insert(w.limbs_.end(), rhs.limbs_.begin(), rhs.limbs_.end());
    w.len_ += rhs.len_;
    return w;
  }
  for (std::size_t i = 0; i < rhs.len_; ++i) w.push_back(rhs[i]);
  return w;
}

BinaryWord BinaryWord::operator+(Symbol rhs) const {
  BinaryWord w = *this;
  w.push_back(rhs);
  return w;
}

std::strong_ordering operator<=>(const BinaryWord& x, const BinaryWord& y) noexcept {
  // Padding bits are zero (= 'a'), so limb order decides unless one word is
  // a prefix of the other padded with a's; length breaks that tie.
  std::size_t n = std::min(x.limbs_.size(), y.limbs_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (x.limbs_[i] != y.limbs_[i]) return x.limbs_[i] <=> y.limbs_[i];
  for (std::size_t i = n; i < y.limbs_.size(); ++i)
    if (y.limbs_[i] != 0) return std::strong_ordering::less;
  for (std::size_t i = n; i < x.limbs_.size(); ++i)
    if (x.limbs_[i] != 0) return std::strong_ordering::greater;
  return x.len_ <=> y.len_;
}

WordBuilder& WordBuilder::add(Symbol s, std::size_t times) {
  for (std::size_t t = 0; t < times; ++t) word_.push_back(s);
  return *this;
}

WordBuilder& WordBuilder::add(const BinaryWord& w, std::size_t times) {
  for (std::size_t t = 0; t < times; ++t)
    for (std::size_t i = 0; i < w.size(); ++i) word_.push_back(w[i]);
  return *this;
}

BinaryWord pow(const BinaryWord& w, std::size_t times) {
  return WordBuilder{}.add(w, times).build();
}

std::size_t BlockDecomposition::blocks_of(Symbol s) const {
  return static_cast<std::size_t>(
      std::count_if(runs.begin(), runs.end(), [s](const Run& r) { return r.symbol == s; }));
}

BinaryWord BlockDecomposition::expand() const {
  WordBuilder b;
  for (const Run& r : runs) b.add(r.symbol, r.length);
  return b.build();
}

BinaryWord reverse(const BinaryWord& w) {
  const std::size_t n = w.size();
  if (n <= 64) {
    if (n == 0) return w;
    return BinaryWord::from_index(reverse_bits(w.index()) >> (64 - n), n);
  }
  WordBuilder b;
  for (std::size_t i = n; i-- > 0;) b.add(w[i]);
  return b.build();
}

BinaryWord rename(const BinaryWord& w) {
  const std::size_t n = w.size();
  if (n <= 64) {
    if (n == 0) return w;
    return BinaryWord::from_index(~w.index() & low_mask(n), n);
  }
  WordBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add(complement(w[i]));
  return b.build();
}

BinaryWord canonical(const BinaryWord& w) {
  const std::size_t n = w.size();
  if (n <= 64) {
    if (n == 0) return w;
    std::uint64_t v = w.index();
    std::uint64_t r = reverse_bits(v) >> (64 - n);
    std::uint64_t m = low_mask(n);
    std::uint64_t best = std::min({v, r, ~v & m, ~r & m});
    return BinaryWord::from_index(best, n);
  }
  BinaryWord r = reverse(w);
  return std::min({w, r, rename(w), rename(r)});
}

bool is_canonical(const BinaryWord& w) {
  const std::size_t n = w.size();
  if (n <= 64) {
    if (n == 0) return true;
    std::uint64_t v = w.index();
    std::uint64_t r = reverse_bits(v) >> (64 - n);
    std::uint64_t m = low_mask(n);
    return v <= r && v <= (~v & m) && v <= (~r & m);
  }
  return canonical(w) == w;
}

BlockDecomposition blocks(const BinaryWord& w) {
  BlockDecomposition d;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!d.runs.empty() && d.runs.back().symbol == w[i])
      ++d.runs.back().length;
    else
      d.runs.push_back({w[i], 1});
  }
  return d;
}

BalanceClass balance(const BinaryWord& w) {
  std::size_t nb = w.count(Symbol::b), na = w.size() - nb;
  std::size_t c = na > nb ? na - nb : nb - na;
  return {c, c == 0};
}

BinaryWord alternating_prefix(std::size_t n) {
  WordBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add(i % 2 == 0 ? Symbol::a : Symbol::b);
  return b.build();
}

bool is_alternating_prefix(const BinaryWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != (i % 2 == 0 ? Symbol::a : Symbol::b)) return false;
  return true;
}

}  // namespace scatfact

std::size_t std::hash<scatfact::BinaryWord>::operator()(const scatfact::BinaryWord& w) const noexcept {
  std::size_t seed = w.size();
  for (auto limb : w.limbs()) boost::hash_combine(seed, limb);
  return seed;
}
