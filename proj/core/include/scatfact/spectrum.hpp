#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scatfact/word.hpp"

namespace scatfact {

// ScatFact_k(w) as a 2^k-bit membership set indexed by the packed encoding.
class Spectrum {
 public:
  static constexpr std::size_t kMaxLength = 25;

  explicit Spectrum(std::size_t k = 0);

  std::size_t length() const noexcept { return k_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(const BinaryWord& u) const noexcept;
  bool contains_index(std::uint64_t index) const noexcept {
    return (bits_[index >> 6] >> (index & 63)) & 1u;
  }
  void insert(const BinaryWord& u);
  void insert_index(std::uint64_t index) noexcept {
    bits_[index >> 6] |= std::uint64_t{1} << (index & 63);
  }

  // Members in increasing index order, which is lexicographic order.
  template <class F>
  void for_each_index(F&& f) const {
    for (std::size_t limb = 0; limb < bits_.size(); ++limb) {
      std::uint64_t x = bits_[limb];
      while (x) {
        f(static_cast<std::uint64_t>(limb * 64 + static_cast<std::size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
  }
  std::vector<BinaryWord> words() const;

  // Members with equally many a's and b's.
  Spectrum balanced() const;
  bool is_subset_of(const Spectrum& other) const;

  const std::vector<std::uint64_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
  friend Spectrum symmetric_difference(const Spectrum& x, const Spectrum& y);

 private:
  std::size_t k_;
  std::vector<std::uint64_t> bits_;
};

using FullSpectrum = std::vector<Spectrum>;

// Greedy leftmost embedding.
bool is_scattered_factor(const BinaryWord& u, const BinaryWord& w);

// Distinct length-k subsequences; empty when k > |w|; RangeError when k > 25.
Spectrum spectrum(const BinaryWord& w, std::size_t k);

// |ScatFact_k(w)| without building the set (distinct-subsequence DP).
// RangeError when k > 63.
std::uint64_t spectrum_cardinality(const BinaryWord& w, std::size_t k);

FullSpectrum full_spectrum(const BinaryWord& w, std::size_t k);

// ScatFact_k(w) = Sigma^k, decided by counting disjoint ab/ba pairs.
bool has_full_k_spectrum(const BinaryWord& w, std::size_t k);

bool spectra_equal(const BinaryWord& w1, const BinaryWord& w2, std::size_t k);

Spectrum balanced_subspectrum(const BinaryWord& w, std::size_t k);

// JSON array of words in lexicographic order.
std::string to_json(const Spectrum& s);
// CSV with header "index,word", rows by index.
void write_csv(std::ostream& out, const Spectrum& s);

}  // namespace scatfact
