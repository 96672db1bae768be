#pragma once

#include "cce/corpus.hpp"
#include "cce/ngram_lm.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace cce::testing {

inline std::filesystem::path toy_corpus_dir() { return CCE_TOY_CORPUS_DIR; }

inline const Corpus& toy_corpus() {
  static const Corpus corpus = ingest(toy_corpus_dir(), IngestOptions{});
  return corpus;
}

// Fresh scratch directory, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& name) : path_(std::filesystem::path(CCE_TEST_TMP) / name) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Next-token table keyed by the last history token. Rows list
// (token, logprob) pairs; top_next returns them best first. Every call is
// counted.
class TableModel final : public TokenModel {
 public:
  explicit TableModel(std::vector<std::string> texts) : texts_(std::move(texts)) {}

  void set(TokenId last, std::vector<ScoredToken> row) {
    std::sort(row.begin(), row.end(), [](const ScoredToken& a, const ScoredToken& b) {
      return a.logprob != b.logprob ? a.logprob > b.logprob : a.id < b.id;
    });
    rows_[last] = std::move(row);
  }

  std::vector<ScoredToken> top_next(std::span<const TokenId> history,
                                    std::size_t k) const override {
    ++calls;
    auto it = rows_.find(history.empty() ? TokenId(-1) : history.back());
    if (it == rows_.end()) return {};
    std::vector<ScoredToken> out(it->second.begin(),
                                 it->second.begin() + std::min(k, it->second.size()));
    return out;
  }
  std::string_view token_text(TokenId id) const override { return texts_.at(id); }

  mutable std::size_t calls = 0;

 private:
  std::vector<std::string> texts_;
  std::map<TokenId, std::vector<ScoredToken>> rows_;
};

}  // namespace cce::testing
