#include "scatfact/spectrum.hpp"

#include <array>
#include <ostream>

#include <json.hpp>

#include "scatfact/error.hpp"

namespace scatfact {

Spectrum::Spectrum(std::size_t k) : k_(k) {
  if (k > kMaxLength)
    throw RangeError("spectrum length " + std::to_string(k) + " exceeds set bound " +
                     std::to_string(kMaxLength) + "; use spectrum_cardinality");
  bits_.assign(((std::size_t{1} << k) + 63) / 64, 0);
}

std::size_t Spectrum::size() const noexcept {
  std::size_t n = 0;
  for (auto x : bits_) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

bool Spectrum::contains(const BinaryWord& u) const noexcept {
  return u.size() == k_ && contains_index(u.index());
}

void Spectrum::insert(const BinaryWord& u) {
  if (u.size() != k_) throw RangeError("spectrum insert: word length differs from k");
  insert_index(u.index());
}

std::vector<BinaryWord> Spectrum::words() const {
  std::vector<BinaryWord> out;
  out.reserve(size());
  for_each_index([&](std::uint64_t v) { out.push_back(BinaryWord::from_index(v, k_)); });
  return out;
}

Spectrum Spectrum::balanced() const {
  Spectrum out(k_);
  if (k_ % 2) return out;
  for_each_index([&](std::uint64_t v) {
    if (static_cast<std::size_t>(std::popcount(v)) * 2 == k_) out.insert_index(v);
  });
  return out;
}

bool Spectrum::is_subset_of(const Spectrum& other) const {
  if (k_ != other.k_) return empty();
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

Spectrum symmetric_difference(const Spectrum& x, const Spectrum& y) {
  if (x.k_ != y.k_) throw RangeError("symmetric_difference: spectra of different lengths");
  Spectrum out(x.k_);
  for (std::size_t i = 0; i < x.bits_.size(); ++i) out.bits_[i] = x.bits_[i] ^ y.bits_[i];
  return out;
}

bool is_scattered_factor(const BinaryWord& u, const BinaryWord& w) {
  std::size_t p = 0;
  for (std::size_t i = 0; i < w.size() && p < u.size(); ++i)
    if (w[i] == u[p]) ++p;
  return p == u.size();
}

namespace {

struct Enumerator {
  const BinaryWord& w;
  std::size_t n, k;
  // next[pos][s] = first index >= pos holding s, or n.
  std::vector<std::array<std::uint32_t, 2>> next;
  Spectrum& out;

  void run(std::size_t pos, std::size_t depth, std::uint64_t value) {
    if (depth == k) {
      out.insert_index(value);
      return;
    }
    for (unsigned s = 0; s < 2; ++s) {
      std::size_t p = next[pos][s];
      if (p < n && n - p >= k - depth) run(p + 1, depth + 1, (value << 1) | s);
    }
  }
};

}  // namespace

Spectrum spectrum(const BinaryWord& w, std::size_t k) {
  Spectrum out(k);
  const std::size_t n = w.size();
  if (k > n) return out;
  Enumerator e{w, n, k, std::vector<std::array<std::uint32_t, 2>>(n + 1), out};
  e.next[n] = {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n)};
  for (std::size_t i = n; i-- > 0;) {
    e.next[i] = e.next[i + 1];
    e.next[i][static_cast<unsigned>(w[i])] = static_cast<std::uint32_t>(i);
  }
  e.run(0, 0, 0);
  return out;
}

std::uint64_t spectrum_cardinality(const BinaryWord& w, std::size_t k) {
  if (k > 63) throw RangeError("spectrum_cardinality supports k <= 63");
  const std::size_t n = w.size();
  if (k > n) return 0;
  // row[l] = number of distinct length-l subsequences of the prefix read so far.
  // before[s] is the row as it stood just before the last occurrence of s;
  // subtracting its shift removes subsequences already counted at that occurrence.
  std::array<std::uint64_t, 64> row{}, next{};
  std::array<std::array<std::uint64_t, 64>, 2> before{};
  row[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = static_cast<unsigned>(w[i]);
    next[0] = 1;
    for (std::size_t l = 1; l <= k; ++l) next[l] = row[l] + row[l - 1] - before[s][l - 1];
    before[s] = row;
    row = next;
  }
  return row[k];
}

FullSpectrum full_spectrum(const BinaryWord& w, std::size_t k) {
  if (k > Spectrum::kMaxLength) throw RangeError("full_spectrum: k exceeds set bound 25");
  FullSpectrum out;
  out.reserve(k + 1);
  for (std::size_t j = 0; j <= k; ++j) out.push_back(spectrum(w, j));
  return out;
}

bool has_full_k_spectrum(const BinaryWord& w, std::size_t k) {
  // Greedy: each pair closes at the first symbol differing from its opener.
  std::size_t pairs = 0, i = 0;
  const std::size_t n = w.size();
  while (pairs < k && i < n) {
    const Symbol open = w[i];
    std::size_t j = i + 1;
    while (j < n && w[j] == open) ++j;
    if (j == n) break;
    ++pairs;
    i = j + 1;
  }
  return pairs >= k;
}

bool spectra_equal(const BinaryWord& w1, const BinaryWord& w2, std::size_t k) {
  return spectrum(w1, k) == spectrum(w2, k);
}

Spectrum balanced_subspectrum(const BinaryWord& w, std::size_t k) {
  if (k % 2) return Spectrum(k);
  return spectrum(w, k).balanced();
}

std::string to_json(const Spectrum& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& u : s.words()) arr.push_back(u.str());
  return arr.dump();
}

void write_csv(std::ostream& out, const Spectrum& s) {
  out << "index,word\n";
  s.for_each_index([&](std::uint64_t v) {
    out << v << ',' << BinaryWord::from_index(v, s.length()).str() << '\n';
  });
}

}  // namespace scatfact
