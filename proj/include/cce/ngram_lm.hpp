#pragma once

#include "cce/bpe.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cce {

struct ScoredToken {
  TokenId id;
  double logprob;
  friend bool operator==(const ScoredToken&, const ScoredToken&) = default;
};

// Next-token distribution interface consumed by beam search.
class TokenModel {
 public:
  virtual ~TokenModel() = default;
  // The k most likely next tokens after `history`, by descending logprob and
  // then ascending id.
  virtual std::vector<ScoredToken> top_next(std::span<const TokenId> history,
                                            std::size_t k) const = 0;
  virtual std::string_view token_text(TokenId id) const = 0;
};

// Order-n token LM with stupid backoff, renormalized per history so that
// every conditional distribution sums to one:
//   S(w|h) = c(h,w)/c(h)          if c(h,w) > 0
//          = backoff * S(w|h')    otherwise (h' drops the oldest token)
//   S(w)   = (c(w)+1)/(N+V)       at the unigram level
//   P(w|h) = S(w|h) / Z(h),  Z(h) = sum_w S(w|h)
// Histories never seen back off to their longest seen suffix at no cost.
// Ids 0..V-1 are predictable tokens; id V is the begin-of-sequence marker.
class NgramModel {
 public:
  static constexpr std::size_t kDefaultOrder = 5;
  static constexpr double kDefaultBackoff = 0.4;

  NgramModel() = default;

  // Each sequence is counted with one begin-of-sequence marker in front.
  static NgramModel train(std::span<const std::vector<TokenId>> sequences,
                          std::size_t vocab_size, std::size_t order = kDefaultOrder,
                          double backoff = kDefaultBackoff);

  std::size_t order() const { return order_; }
  std::size_t vocab_size() const { return vocab_size_; }
  double backoff() const { return backoff_; }
  TokenId bos() const { return static_cast<TokenId>(vocab_size_); }

  double logprob(std::span<const TokenId> history, TokenId next) const;
  // c(h,w)/c(h) on the longest seen suffix of `history`; the unsmoothed
  // maximum-likelihood estimate.
  double relative_frequency(std::span<const TokenId> history, TokenId next) const;
  std::vector<ScoredToken> top_next(std::span<const TokenId> history, std::size_t k) const;

  // Number of distinct histories (all orders).
  std::size_t context_count() const;

  // "ngram order=.. vocab=.. backoff=.." then one "count id..." line per
  // n-gram; normalizers are recomputed on load.
  std::string serialize() const;
  static NgramModel deserialize(std::string_view text);

 private:
  struct Context {
    std::uint64_t total = 0;
    std::vector<std::pair<TokenId, std::uint32_t>> by_id;     // sorted by id
    std::vector<std::pair<TokenId, std::uint32_t>> by_count;  // count desc, id asc
    double z = 1.0;
  };

  static std::string key(std::span<const TokenId> ids);
  const Context* find(std::span<const TokenId> history) const;
  static std::uint32_t count_of(const Context& ctx, TokenId w);
  // Longest suffix of `history` (at most order-1 tokens) that was seen.
  std::span<const TokenId> effective(std::span<const TokenId> history) const;
  double score(std::span<const TokenId> eff, TokenId w) const;
  void add(std::span<const TokenId> history, TokenId w, std::uint32_t count);
  void finalize();

  std::size_t order_ = kDefaultOrder;
  std::size_t vocab_size_ = 0;
  double backoff_ = kDefaultBackoff;
  std::uint64_t unigram_total_ = 0;
  std::vector<std::unordered_map<std::string, Context>> levels_;  // by history length
};

// TokenModel over an n-gram model and the BPE vocabulary it was trained on.
class BpeNgramModel final : public TokenModel {
 public:
  BpeNgramModel(const NgramModel& lm, const BpeModel& bpe) : lm_(lm), bpe_(bpe) {}
  std::vector<ScoredToken> top_next(std::span<const TokenId> history,
                                    std::size_t k) const override {
    return lm_.top_next(history, k);
  }
  std::string_view token_text(TokenId id) const override;

 private:
  const NgramModel& lm_;
  const BpeModel& bpe_;
};

}  // namespace cce
