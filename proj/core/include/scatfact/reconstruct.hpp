#pragma once

#include <cstddef>
#include <functional>
#include <string_view>

#include "scatfact/word.hpp"

namespace scatfact {

// Membership queries "u in ScatFact_m(hidden)?". Single consumer: the query
// counter is mutable state.
class SpectrumOracle {
 public:
  using Membership = std::function<bool(const BinaryWord&)>;

  SpectrumOracle(Membership membership, std::size_t query_length, bool balanced_only);

  // Throws QueryRejected for a wrong-length query, or an unbalanced one when
  // balanced_only is set. Rejected queries are not counted.
  bool contains(const BinaryWord& u);

  std::size_t query_length() const noexcept { return m_; }
  bool balanced_only() const noexcept { return balanced_only_; }
  std::size_t query_count() const noexcept { return count_; }

 private:
  Membership membership_;
  std::size_t m_;
  bool balanced_only_;
  std::size_t count_ = 0;
};

// Oracle backed by is_scattered_factor against a known word.
SpectrumOracle real_oracle(const BinaryWord& w, std::size_t m, bool balanced_only);

enum class ReconstructionMethod { general, two_blocks };
std::string_view method_name(ReconstructionMethod m) noexcept;

struct ReconstructionResult {
  BinaryWord word;
  std::size_t queries_used = 0;
  ReconstructionMethod method;
};

// Strictly balanced hidden word of length 2k from queries a^i b a^j and
// b^i a b^j (i + j = k) against ScatFact_{k+1}. At most 2(k+1) queries.
ReconstructionResult reconstruct_general(SpectrumOracle& oracle, std::size_t k);

// Query length for reconstruct_two_blocks: k+1 for odd k, k+2 for even k.
std::size_t two_block_query_length(std::size_t k);

// Hidden word a^i b^j a^l b^{k-j} a^{k-i-l} of length 2k, from strictly
// balanced queries of length two_block_query_length(k).
ReconstructionResult reconstruct_two_blocks(SpectrumOracle& oracle, std::size_t k);

}  // namespace scatfact
