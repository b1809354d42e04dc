#include "scatfact/delseq.hpp"

#include <string>

#include "scatfact/error.hpp"

namespace scatfact {

DeletingSequence::DeletingSequence(std::vector<std::size_t> positions)
    : positions_(std::move(positions)) {
  for (std::size_t t = 0; t < positions_.size(); ++t) {
    if (positions_[t] == 0) throw RangeError("deleting sequence: positions are 1-based");
    if (t > 0 && positions_[t] <= positions_[t - 1])
      throw RangeError("deleting sequence: positions must be strictly increasing");
  }
}

bool DeletingSequence::valid_for(std::size_t word_length) const noexcept {
  return positions_.empty() || positions_.back() <= word_length;
}

DeletingSequence NormalForm::to_sequence() const {
  std::vector<std::size_t> p;
  p.reserve(j + tail.size());
  for (std::size_t t = 1; t <= j; ++t) p.push_back(t);
  p.insert(p.end(), tail.begin(), tail.end());
  return DeletingSequence(std::move(p));
}

BinaryWord apply(const BinaryWord& w, const DeletingSequence& sigma) {
  if (!sigma.valid_for(w.size()))
    throw RangeError("deleting sequence position " + std::to_string(sigma.positions().back()) +
                     " exceeds word length " + std::to_string(w.size()));
  WordBuilder b;
  const auto& p = sigma.positions();
  std::size_t t = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (t < p.size() && p[t] == i + 1) {
      ++t;
      continue;
    }
    b.add(w[i]);
  }
  return b.build();
}

bool equivalent(const BinaryWord& w, const DeletingSequence& s1, const DeletingSequence& s2) {
  return apply(w, s1) == apply(w, s2);
}

namespace {

void require_alternating(const BinaryWord& w, const DeletingSequence& sigma) {
  if (!is_alternating_prefix(w)) throw RangeError("word is not a prefix of (ab)^omega");
  if (!sigma.valid_for(w.size())) throw RangeError("deleting sequence exceeds word length");
}

}  // namespace

std::optional<DeletingSequence> reduce_step(const BinaryWord& w, const DeletingSequence& sigma) {
  require_alternating(w, sigma);
  auto p = sigma.positions();
  for (std::size_t t = 0; t + 1 < p.size(); ++t) {
    const std::size_t prev = t == 0 ? 0 : p[t - 1];
    if (p[t] + 1 == p[t + 1] && prev + 1 < p[t]) {
      --p[t];
      --p[t + 1];
      return DeletingSequence(std::move(p));
    }
  }
  return std::nullopt;
}

bool is_normal_form(const DeletingSequence& sigma) {
  const auto& p = sigma.positions();
  std::size_t j = 0;
  while (j < p.size() && p[j] == j + 1) ++j;
  for (std::size_t t = j + 1; t < p.size(); ++t)
    if (p[t] == p[t - 1] + 1) return false;
  return true;
}

NormalForm normalize(const BinaryWord& w, const DeletingSequence& sigma) {
  DeletingSequence cur = sigma;
  while (auto nxt = reduce_step(w, cur)) cur = std::move(*nxt);
  const auto& p = cur.positions();
  NormalForm nf;
  while (nf.j < p.size() && p[nf.j] == nf.j + 1) ++nf.j;
  nf.tail.assign(p.begin() + static_cast<std::ptrdiff_t>(nf.j), p.end());
  return nf;
}

BigInt count_normal_forms(std::size_t n, std::size_t k) {
  if (k > n) throw RangeError("count_normal_forms: k must not exceed n");
  BigInt sum = 0;
  for (std::size_t j = 0; j <= k; ++j)
    sum += binomial(static_cast<std::int64_t>(n - k), static_cast<std::int64_t>(k - j));
  return sum;
}

std::vector<BinaryWord> WordStream::collect() {
  std::vector<BinaryWord> out;
  while (auto w = next()) out.push_back(std::move(*w));
  return out;
}

DistinctFactorStream::DistinctFactorStream(std::size_t n, std::size_t l)
    : word_(alternating_prefix(n)), n_(n), k_(0) {
  if (l > n) throw RangeError("enumerate_distinct: l must not exceed n");
  k_ = n - l;
  done_ = !start_block();
}

bool DistinctFactorStream::start_block() {
  for (; j_ <= k_; ++j_) {
    const std::size_t m = k_ - j_;
    tail_.resize(m);
    for (std::size_t t = 0; t < m; ++t) tail_[t] = j_ + 2 + 2 * t;
    if (m == 0 || tail_.back() <= n_) return true;
  }
  return false;
}

bool DistinctFactorStream::advance_tail() {
  const std::size_t m = tail_.size();
  for (std::size_t t = m; t-- > 0;) {
    const std::size_t limit = n_ - 2 * (m - 1 - t);
    if (tail_[t] < limit) {
      ++tail_[t];
      for (std::size_t u = t + 1; u < m; ++u) tail_[u] = tail_[u - 1] + 2;
      return true;
    }
  }
  return false;
}

std::optional<BinaryWord> DistinctFactorStream::next() {
  if (done_) return std::nullopt;
  WordBuilder b;
  std::size_t t = 0;
  for (std::size_t p = j_ + 1; p <= n_; ++p) {
    if (t < tail_.size() && tail_[t] == p) {
      ++t;
      continue;
    }
    b.add(word_[p - 1]);
  }
  if (!advance_tail()) {
    ++j_;
    done_ = !start_block();
  }
  return b.build();
}

AbPowerAStream::AbPowerAStream(std::size_t k, std::size_t c, std::size_t i) : k_(k), c_(c), i_(i) {
  if (c > k) throw RangeError("enumerate_ab_power_a: c must satisfy c <= k");
  if (i > k) throw RangeError("enumerate_ab_power_a: i must satisfy i <= k");
}

bool AbPowerAStream::open_inner() {
  // u ranges over SF_{i-j-1} of the prefix preceding the rightmost b that
  // still has j a's after it: (ab)^{k-j-1} a when j >= c, else (ab)^{k-c-1} a.
  for (; j_ < i_; ++j_) {
    const std::size_t m = i_ - j_ - 1;
    std::size_t len;
    if (j_ >= c_) {
      len = 2 * (k_ - j_ - 1) + 1;
    } else {
      if (c_ == k_) continue;
      len = 2 * (k_ - c_ - 1) + 1;
    }
    if (m > len) continue;
    inner_.emplace(len, m);
    return true;
  }
  return false;
}

std::optional<BinaryWord> AbPowerAStream::next() {
  if (!emitted_power_) {
    emitted_power_ = true;
    if (!open_inner()) inner_.reset();
    return BinaryWord::repeat(Symbol::a, i_);
  }
  while (inner_) {
    if (auto u = inner_->next())
      return WordBuilder{}.add(*u).add(Symbol::b).add(Symbol::a, j_).build();
    ++j_;
    if (!open_inner()) inner_.reset();
  }
  return std::nullopt;
}

DistinctFactorStream enumerate_distinct(std::size_t n, std::size_t l) {
  return DistinctFactorStream(n, l);
}

AbPowerAStream enumerate_ab_power_a(std::size_t k, std::size_t c, std::size_t i) {
  return AbPowerAStream(k, c, i);
}

}  // namespace scatfact
