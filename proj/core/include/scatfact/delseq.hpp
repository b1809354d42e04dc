#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "scatfact/bigint.hpp"
#include "scatfact/word.hpp"

namespace scatfact {

// Strictly increasing 1-based positions to delete.
class DeletingSequence {
 public:
  DeletingSequence() = default;
  // Throws RangeError unless strictly increasing and >= 1.
  explicit DeletingSequence(std::vector<std::size_t> positions);

  const std::vector<std::size_t>& positions() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool valid_for(std::size_t word_length) const noexcept;

  friend bool operator==(const DeletingSequence&, const DeletingSequence&) = default;

 private:
  std::vector<std::size_t> positions_;
};

struct NormalForm {
  std::size_t j = 0;              // positions 1..j are deleted
  std::vector<std::size_t> tail;  // > j+1, pairwise non-adjacent
  DeletingSequence to_sequence() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

BinaryWord apply(const BinaryWord& w, const DeletingSequence& sigma);
bool equivalent(const BinaryWord& w, const DeletingSequence& s1, const DeletingSequence& s2);

// One shift step on an alternating prefix: the leftmost adjacent pair
// (s_t, s_t + 1) whose predecessor (s_0 = 0 virtually) leaves a gap moves
// one to the left. nullopt when no such pair exists.
std::optional<DeletingSequence> reduce_step(const BinaryWord& w, const DeletingSequence& sigma);
NormalForm normalize(const BinaryWord& w, const DeletingSequence& sigma);
bool is_normal_form(const DeletingSequence& sigma);

// sum_{j=0..k} C(n-k, k-j)
BigInt count_normal_forms(std::size_t n, std::size_t k);

class WordStream {
 public:
  virtual ~WordStream() = default;
  virtual std::optional<BinaryWord> next() = 0;
  std::vector<BinaryWord> collect();
};

// ScatFact_l(prefix_n((ab)^omega)), each word once: ascending number j of
// deleted leading positions, then lexicographic non-adjacent tails.
class DistinctFactorStream final : public WordStream {
 public:
  DistinctFactorStream(std::size_t n, std::size_t l);
  std::optional<BinaryWord> next() override;

 private:
  bool start_block();
  bool advance_tail();

  BinaryWord word_;
  std::size_t n_, k_;  // k_ = deletions
  std::size_t j_ = 0;
  std::vector<std::size_t> tail_;
  bool pending_ = false;
  bool done_ = false;
};

// ScatFact_i((ab)^{k-c} a^c): a^i first, then u b a^j for j = 0..i-1.
class AbPowerAStream final : public WordStream {
 public:
  AbPowerAStream(std::size_t k, std::size_t c, std::size_t i);
  std::optional<BinaryWord> next() override;

 private:
  bool open_inner();

  std::size_t k_, c_, i_;
  bool emitted_power_ = false;
  std::size_t j_ = 0;
  std::optional<DistinctFactorStream> inner_;
};

DistinctFactorStream enumerate_distinct(std::size_t n, std::size_t l);
AbPowerAStream enumerate_ab_power_a(std::size_t k, std::size_t c, std::size_t i);

}  // namespace scatfact
