#include "cce/lm_strategy.hpp"

#include "cce/common.hpp"
#include "cce/lexer.hpp"

#include <algorithm>
#include <cstring>
#include <set>

namespace cce {

std::vector<std::vector<TokenId>> lm_training_sequences(std::span<const CodeFile* const> files,
                                                        const BpeModel& bpe) {
  std::vector<std::vector<TokenId>> out;
  out.reserve(files.size());
  for (const CodeFile* f : files) out.push_back(bpe.encode(f->text));
  return out;
}

std::optional<std::size_t> lm_anchor(std::string_view prefix) {
  const std::size_t anchor = prefix.size() - trailing_identifier_length(prefix);
  if (anchor == 0) return std::nullopt;
  if (is_ident_char(prefix[anchor - 1])) return std::nullopt;
  return anchor;
}

LmStrategy::LmStrategy(const BpeModel& bpe, const NgramModel& lm, LmStrategyOptions options)
    : bpe_(bpe), lm_(lm), model_(lm, bpe), options_(options) {
  if (lm.vocab_size() != bpe.vocab_size())
    throw Error("lm strategy: language model and BPE vocabulary sizes differ");
}

std::vector<TokenId> LmStrategy::encode_context(std::string_view anchor_context) const {
  std::size_t start = 0;
  if (anchor_context.size() > options_.window_chars) {
    start = anchor_context.size() - options_.window_chars;
    const auto nl = anchor_context.find('\n', start);
    if (nl != std::string_view::npos) start = nl + 1;
  }
  auto ids = bpe_.encode(anchor_context.substr(start));
  if (ids.size() >= options_.max_context_ids) {
    ids.erase(ids.begin(), ids.end() - static_cast<std::ptrdiff_t>(options_.max_context_ids));
  } else if (start == 0) {
    ids.insert(ids.begin(), lm_.bos());
  }
  return ids;
}

std::vector<Beam> LmStrategy::search(std::string_view anchor_context, const TokenModel& model,
                                     BeamStats* stats) const {
  const auto ids = encode_context(anchor_context);
  return beam_search(model, ids, options_.beam, stats, anchor_context);
}

std::vector<Candidate> LmStrategy::candidates_from(const std::vector<Beam>& beams,
                                                   std::string_view typed, std::size_t k) {
  struct Hit {
    std::string text;
    double logprob;
  };
  std::vector<Hit> hits;
  std::set<std::string, std::less<>> seen;
  for (const auto& b : beams) {
    std::string_view text = b.text;
    text = text.substr(0, text.find('\n'));
    if (text.size() <= typed.size() || !text.starts_with(typed)) continue;
    const auto rest = text.substr(typed.size());
    if (rest.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (!seen.emplace(rest).second) continue;
    hits.push_back({std::string(rest), b.logprob});
  }
  std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.logprob != b.logprob) return a.logprob > b.logprob;
    return a.text < b.text;
  });
  if (hits.size() > k) hits.resize(k);
  std::vector<RankedEntry> entries;
  for (auto& h : hits)
    entries.push_back({std::move(h.text), {{std::string(dims::kLmLogprob), h.logprob}}});
  return make_candidates(strategy_ids::kLm, std::move(entries));
}

std::vector<Candidate> LmStrategy::query(std::string_view prefix, std::size_t k,
                                         BeamStats* stats) const {
  const auto anchor = lm_anchor(prefix);
  if (!anchor || k == 0) return {};
  const auto beams = search(prefix.substr(0, *anchor), stats);
  return candidates_from(beams, prefix.substr(*anchor), k);
}

std::unique_ptr<StrategySession> LmStrategy::new_session() const {
  return std::make_unique<LmSession>(*this);
}

std::vector<ScoredToken> MemoTokenModel::top_next(std::span<const TokenId> history,
                                                  std::size_t k) const {
  const auto visible = history.last(std::min(history.size(), visible_));
  std::string key(sizeof(std::size_t) + visible.size_bytes(), '\0');
  std::memcpy(key.data(), &k, sizeof(std::size_t));
  if (!visible.empty())
    std::memcpy(key.data() + sizeof(std::size_t), visible.data(), visible.size_bytes());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto result = inner_.top_next(history, k);
  if (memo_.size() >= capacity_) memo_.clear();
  memo_.emplace(std::move(key), result);
  return result;
}

LmSession::LmSession(const LmStrategy& strategy)
    : strategy_(strategy),
      direct_(strategy.lm(), strategy.bpe()),
      memo_(direct_, strategy.lm().order() - 1) {}

std::vector<Candidate> LmSession::query(std::string_view prefix, std::size_t k) {
  const auto anchor = lm_anchor(prefix);
  if (!anchor || k == 0) return {};
  const auto context = prefix.substr(0, *anchor);
  if (strategy_.options().use_cache && cached_ && context == cached_context_) {
    ++cache_hits_;
  } else {
    BeamStats stats;
    cached_beams_ = strategy_.search(context, memo_, &stats);
    cached_context_.assign(context);
    cached_ = true;
    ++searches_;
    evaluations_ += stats.prefill + stats.evaluations;
  }
  return LmStrategy::candidates_from(cached_beams_, prefix.substr(*anchor), k);
}

}  // namespace cce
