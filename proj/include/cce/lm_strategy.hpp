#pragma once

#include "cce/beam_search.hpp"
#include "cce/bpe.hpp"
#include "cce/candidate.hpp"
#include "cce/corpus.hpp"
#include "cce/ngram_lm.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cce {

struct LmStrategyOptions {
  BeamConfig beam;
  std::size_t window_chars = 2048;
  std::size_t max_context_ids = 256;
  bool use_cache = true;
};

// One id sequence per file.
std::vector<std::vector<TokenId>> lm_training_sequences(std::span<const CodeFile* const> files,
                                                        const BpeModel& bpe);

// The LM searches from the start of the identifier being typed (the anchor)
// and filters its results by the characters typed since. It fires only when
// the text before the anchor is non-empty and ends outside an identifier or
// number. Returns nullopt when it does not fire.
std::optional<std::size_t> lm_anchor(std::string_view prefix);

class LmStrategy final : public Strategy {
 public:
  LmStrategy(const BpeModel& bpe, const NgramModel& lm, LmStrategyOptions options = {});

  std::string_view id() const override { return strategy_ids::kLm; }
  std::vector<std::string> dimensions() const override { return {std::string(dims::kLmLogprob)}; }
  std::string primary_dimension() const override { return std::string(dims::kLmLogprob); }
  std::unique_ptr<StrategySession> new_session() const override;

  // Beam search at the end of `anchor_context`.
  std::vector<Beam> search(std::string_view anchor_context, const TokenModel& model,
                           BeamStats* stats = nullptr) const;
  std::vector<Beam> search(std::string_view anchor_context, BeamStats* stats = nullptr) const {
    return search(anchor_context, model_, stats);
  }

  // Uncached query: search at the anchor of `prefix`, then filter.
  std::vector<Candidate> query(std::string_view prefix, std::size_t k,
                               BeamStats* stats = nullptr) const;

  // Candidates from beams given the characters typed after the anchor.
  static std::vector<Candidate> candidates_from(const std::vector<Beam>& beams,
                                                std::string_view typed, std::size_t k);

  const BpeModel& bpe() const { return bpe_; }
  const NgramModel& lm() const { return lm_; }
  const LmStrategyOptions& options() const { return options_; }

 private:
  std::vector<TokenId> encode_context(std::string_view anchor_context) const;

  const BpeModel& bpe_;
  const NgramModel& lm_;
  BpeNgramModel model_;
  LmStrategyOptions options_;
};

// Memoizes top_next on the part of the history an n-gram model can see.
class MemoTokenModel final : public TokenModel {
 public:
  MemoTokenModel(const TokenModel& inner, std::size_t visible, std::size_t capacity = 1 << 16)
      : inner_(inner), visible_(visible), capacity_(capacity) {}
  std::vector<ScoredToken> top_next(std::span<const TokenId> history,
                                    std::size_t k) const override;
  std::string_view token_text(TokenId id) const override { return inner_.token_text(id); }

 private:
  const TokenModel& inner_;
  std::size_t visible_;
  std::size_t capacity_;
  mutable std::unordered_map<std::string, std::vector<ScoredToken>> memo_;
};

// Follows one file prefix; keeps the beams of the most recent anchor.
class LmSession final : public StrategySession {
 public:
  explicit LmSession(const LmStrategy& strategy);
  std::string_view id() const override { return strategy_.id(); }
  std::vector<Candidate> query(std::string_view prefix, std::size_t k) override;

  std::size_t searches() const { return searches_; }
  std::size_t cache_hits() const { return cache_hits_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  const LmStrategy& strategy_;
  BpeNgramModel direct_;
  MemoTokenModel memo_;
  bool cached_ = false;
  std::string cached_context_;
  std::vector<Beam> cached_beams_;
  std::size_t searches_ = 0;
  std::size_t cache_hits_ = 0;
  std::size_t evaluations_ = 0;
};

}  // namespace cce
