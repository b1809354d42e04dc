#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scatfact/spectrum.hpp"
#include "scatfact/word.hpp"

namespace scatfact {

struct ExplorerOptions {
  unsigned jobs = 0;                       // 0: hardware concurrency
  bool orbits = false;                     // one canonical word per symmetry orbit
  std::optional<std::size_t> max_k;        // raises the desk-scale guard
};

struct CardinalityReport {
  std::size_t k = 0;
  // cardinality -> canonical witnesses (sorted). With orbits=false every
  // balanced word was examined; witnesses are still listed canonically.
  std::map<std::uint64_t, std::vector<BinaryWord>> achieved;
  std::vector<std::uint64_t> missing;  // unachieved values in [min achieved, 2^k]
  std::uint64_t words_examined = 0;
  bool orbit_reduced = false;
};

// All strictly balanced words of length 2k, increasing packed value.
std::vector<std::uint64_t> balanced_word_indices(std::size_t k);

CardinalityReport achievable_cardinalities(std::size_t k, const ExplorerOptions& opts = {});
// CSV rows (k, cardinality, achieved, witness) for every value in [k+1, 2^k].
void write_report_csv(std::ostream& out, const CardinalityReport& r);
std::string report_to_json(const CardinalityReport& r);

enum class Status { holds, fails, skipped };
std::string_view status_name(Status s) noexcept;

struct VerdictEntry {
  std::string parameter;               // e.g. "i=2"
  Status status = Status::holds;
  std::string claim;
  std::optional<BinaryWord> witness;   // always set when status == fails
  std::optional<std::uint64_t> expected;
  std::optional<std::uint64_t> actual;
  std::string note;
};

struct ConjectureVerdict {
  std::string id;
  std::string range;
  std::vector<VerdictEntry> entries;
  bool holds() const;  // no entry fails
};

std::string verdict_to_json(const ConjectureVerdict& v);
std::string verdict_to_text(const ConjectureVerdict& v);

ConjectureVerdict verify_gap_theorems(std::size_t k, const ExplorerOptions& opts = {});
ConjectureVerdict verify_gap_theorems(const CardinalityReport& report);
ConjectureVerdict verify_characterizations(std::size_t k, const ExplorerOptions& opts = {});
ConjectureVerdict check_last_gap_conjecture(std::size_t k);
ConjectureVerdict check_theta_conjecture(std::size_t k_min, std::size_t k_max);
bool is_theta_palindrome(const BinaryWord& w);

// Pairs w < w' of strictly balanced words of length 2k with equal balanced
// m-spectra; pairs sorted.
std::vector<std::pair<BinaryWord, BinaryWord>> find_balanced_collisions(
    std::size_t k, std::size_t m, const ExplorerOptions& opts = {});
std::vector<BinaryWord> balanced_symmetric_difference(const BinaryWord& w1, const BinaryWord& w2,
                                                      std::size_t m);
ConjectureVerdict check_reconstruction_conjecture(std::size_t k, const ExplorerOptions& opts = {});

ConjectureVerdict check_nk_families(std::size_t i, std::size_t k);

// c-balanced words of length 2k-c: |SF_{k-c}| = 2^{k-c} iff has_full_k_spectrum.
ConjectureVerdict verify_full_spectrum_corollary(std::size_t max_length);

// Known conjecture ids for check-conjecture.
const std::vector<std::string>& conjecture_ids();

}  // namespace scatfact
