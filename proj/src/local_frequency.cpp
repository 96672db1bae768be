#include "cce/local_frequency.hpp"

#include <algorithm>

namespace cce {

void LocalFrequencyState::update(const Token& token) {
  if (token.is_word()) update(token.text);
}

void LocalFrequencyState::update(std::string_view word) {
  auto it = counts_.find(word);
  if (it == counts_.end())
    counts_.emplace(std::string(word), 1);
  else
    ++it->second;
}

std::vector<WordMatch> LocalFrequencyState::lookup(std::string_view prefix, std::size_t k) const {
  std::vector<WordMatch> out;
  for (auto it = counts_.lower_bound(prefix);
       it != counts_.end() && std::string_view(it->first).starts_with(prefix); ++it)
    out.push_back({it->first, WordStats{it->second, 0, 0}});
  const auto keep = std::min(out.size(), k);
  std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(keep), out.end(),
                    [](const WordMatch& a, const WordMatch& b) {
                      if (a.stats.count != b.stats.count) return a.stats.count > b.stats.count;
                      return a.word < b.word;
                    });
  out.resize(keep);
  return out;
}

std::vector<Candidate> LocalFrequencyState::query(std::string_view prefix, std::size_t k) const {
  if (prefix.empty() || k == 0) return {};
  std::vector<RankedEntry> entries;
  for (auto& m : lookup(prefix, k + 1)) {
    if (m.word.size() == prefix.size()) continue;
    if (entries.size() == k) break;
    entries.push_back(RankedEntry{m.word.substr(prefix.size()),
                                  {{std::string(dims::kLocalCount), double(m.stats.count)}}});
  }
  return make_candidates(strategy_ids::kLocal, std::move(entries));
}

void LocalFrequencyState::advance(std::string_view prefix) {
  if (prefix.size() < committed_) clear();
  const auto pending = prefix.substr(committed_);
  const auto toks = tokenize(pending);
  if (toks.empty()) return;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) update(toks[i]);
  committed_ += toks.back().offset;
}

void LocalFrequencyState::clear() {
  counts_.clear();
  committed_ = 0;
}

namespace {

class LocalSession final : public StrategySession {
 public:
  std::string_view id() const override { return strategy_ids::kLocal; }
  std::vector<Candidate> query(std::string_view prefix, std::size_t k) override {
    state_.advance(prefix);
    const auto len = trailing_identifier_length(prefix);
    return state_.query(prefix.substr(prefix.size() - len), k);
  }

 private:
  LocalFrequencyState state_;
};

}  // namespace

std::unique_ptr<StrategySession> LocalFrequencyStrategy::new_session() const {
  return std::make_unique<LocalSession>();
}

}  // namespace cce
