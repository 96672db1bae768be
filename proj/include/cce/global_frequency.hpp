#pragma once

#include "cce/candidate.hpp"
#include "cce/corpus.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

struct WordStats {
  std::uint64_t count = 0;          // total occurrences
  std::uint64_t file_count = 0;     // files containing the word
  std::uint64_t project_count = 0;  // projects containing the word
  friend bool operator==(const WordStats&, const WordStats&) = default;
};

struct WordMatch {
  std::string word;
  WordStats stats;
  friend bool operator==(const WordMatch&, const WordMatch&) = default;
};

// Character trie over complete words. Every node caches the best few words
// of its subtree so short-prefix lookups do not walk the whole subtree.
class TrieIndex {
 public:
  static constexpr std::size_t kCachedPerNode = 8;

  TrieIndex();

  void insert(std::string_view word, const WordStats& stats);
  // Must be called after the last insert and before lookups.
  void finalize();

  // Words starting with `prefix` (the prefix itself included when stored),
  // by descending count then ascending text, at most k.
  std::vector<WordMatch> lookup(std::string_view prefix, std::size_t k) const;

  std::size_t size() const { return words_; }
  // All stored words in lexicographic order.
  std::vector<WordMatch> words() const;

 private:
  struct Node {
    std::vector<std::pair<char, std::uint32_t>> children;  // sorted by char
    bool terminal = false;
    WordStats stats;
    std::vector<std::uint32_t> top;  // terminal node ids, best first
  };

  std::uint32_t child(std::uint32_t node, char c) const;
  void collect(std::uint32_t node, std::string& buf, std::vector<WordMatch>& out) const;
  std::string spell(std::uint32_t node) const;

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> parent_;
  std::vector<char> edge_;
  std::size_t words_ = 0;
  bool finalized_ = false;
};

enum class RareFilter { kAnd, kOr };

struct GlobalBuildOptions {
  std::size_t min_length = 5;    // sub-tokens shorter than this may be dropped
  std::size_t min_projects = 2;  // sub-tokens in fewer projects may be dropped
  RareFilter combine = RareFilter::kAnd;
};

struct GlobalBuildStats {
  std::size_t token_vocabulary = 0;     // distinct whole tokens
  std::size_t subtoken_vocabulary = 0;  // distinct sub-tokens before filtering
  std::size_t kept = 0;
};

// Words counted: identifiers, keywords and identifier-like words inside
// comments, each split into sub-tokens.
TrieIndex global_build(std::span<const CodeFile* const> files, const GlobalBuildOptions& options,
                       GlobalBuildStats* stats = nullptr);

// The sub-token being typed at the end of `prefix`, or empty.
std::string_view current_subtoken(std::string_view prefix);

class GlobalFrequencyStrategy final : public Strategy {
 public:
  explicit GlobalFrequencyStrategy(TrieIndex trie) : trie_(std::move(trie)) {}

  std::string_view id() const override { return strategy_ids::kGlobal; }
  std::vector<std::string> dimensions() const override;
  std::string primary_dimension() const override { return std::string(dims::kGlobalCount); }
  std::unique_ptr<StrategySession> new_session() const override;

  // Candidates completing the sub-token `subtoken_prefix`.
  std::vector<Candidate> query(std::string_view subtoken_prefix, std::size_t k) const;

  const TrieIndex& trie() const { return trie_; }

  // One "word<TAB>count<TAB>files<TAB>projects" line per word.
  std::string serialize() const;
  static GlobalFrequencyStrategy deserialize(std::string_view text);

 private:
  TrieIndex trie_;
};

}  // namespace cce
