#include "cce/global_frequency.hpp"

#include "cce/common.hpp"
#include "cce/lexer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cce {
namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

bool better(const WordMatch& a, const WordMatch& b) {
  if (a.stats.count != b.stats.count) return a.stats.count > b.stats.count;
  return a.word < b.word;
}

}  // namespace

TrieIndex::TrieIndex() : nodes_(1), parent_(1, kNone), edge_(1, '\0') {}

std::uint32_t TrieIndex::child(std::uint32_t node, char c) const {
  const auto& ch = nodes_[node].children;
  auto it = std::lower_bound(ch.begin(), ch.end(), c,
                             [](const auto& p, char x) { return p.first < x; });
  return it != ch.end() && it->first == c ? it->second : kNone;
}

void TrieIndex::insert(std::string_view word, const WordStats& stats) {
  if (word.empty()) return;
  std::uint32_t node = 0;
  for (char c : word) {
    auto next = child(node, c);
    if (next == kNone) {
      next = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
      parent_.push_back(node);
      edge_.push_back(c);
      auto& ch = nodes_[node].children;
      auto it = std::lower_bound(ch.begin(), ch.end(), c,
                                 [](const auto& p, char x) { return p.first < x; });
      ch.insert(it, {c, next});
    }
    node = next;
  }
  if (!nodes_[node].terminal) ++words_;
  nodes_[node].terminal = true;
  nodes_[node].stats = stats;
  finalized_ = false;
}

std::string TrieIndex::spell(std::uint32_t node) const {
  std::string s;
  for (; node != 0; node = parent_[node]) s.push_back(edge_[node]);
  std::reverse(s.begin(), s.end());
  return s;
}

void TrieIndex::finalize() {
  // Children always have larger ids than their parent, so a reverse sweep
  // sees every subtree before its root.
  std::vector<std::string> spelled(nodes_.size());
  for (std::uint32_t n = 1; n < nodes_.size(); ++n)
    spelled[n] = spelled[parent_[n]] + edge_[n];
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    if (nodes_[a].stats.count != nodes_[b].stats.count)
      return nodes_[a].stats.count > nodes_[b].stats.count;
    return spelled[a] < spelled[b];
  };
  for (std::size_t i = nodes_.size(); i-- > 0;) {
    auto& node = nodes_[i];
    std::vector<std::uint32_t> pool;
    if (node.terminal) pool.push_back(static_cast<std::uint32_t>(i));
    for (const auto& [_, c] : node.children)
      pool.insert(pool.end(), nodes_[c].top.begin(), nodes_[c].top.end());
    const auto keep = std::min(pool.size(), kCachedPerNode);
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(keep), pool.end(),
                      less);
    pool.resize(keep);
    node.top = std::move(pool);
  }
  finalized_ = true;
}

void TrieIndex::collect(std::uint32_t node, std::string& buf, std::vector<WordMatch>& out) const {
  if (nodes_[node].terminal) out.push_back({buf, nodes_[node].stats});
  for (const auto& [c, next] : nodes_[node].children) {
    buf.push_back(c);
    collect(next, buf, out);
    buf.pop_back();
  }
}

std::vector<WordMatch> TrieIndex::lookup(std::string_view prefix, std::size_t k) const {
  if (!finalized_) throw Error("TrieIndex::lookup before finalize()");
  std::uint32_t node = 0;
  for (char c : prefix) {
    node = child(node, c);
    if (node == kNone) return {};
  }
  std::vector<WordMatch> out;
  if (k <= kCachedPerNode) {
    const auto& top = nodes_[node].top;
    for (std::size_t i = 0; i < top.size() && i < k; ++i)
      out.push_back({spell(top[i]), nodes_[top[i]].stats});
    return out;
  }
  std::string buf(prefix);
  collect(node, buf, out);
  const auto keep = std::min(out.size(), k);
  std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(keep), out.end(),
                    better);
  out.resize(keep);
  return out;
}

std::vector<WordMatch> TrieIndex::words() const {
  std::vector<WordMatch> out;
  std::string buf;
  collect(0, buf, out);
  return out;
}

TrieIndex global_build(std::span<const CodeFile* const> files, const GlobalBuildOptions& options,
                       GlobalBuildStats* stats) {
  struct Acc {
    std::uint64_t count = 0;
    std::set<std::string> files;
    std::set<std::string> projects;
  };
  std::map<std::string, Acc> acc;
  std::set<std::string> token_vocab;
  auto add_word = [&](std::string_view word, const CodeFile& f) {
    token_vocab.emplace(word);
    for (auto& sub : subtokens(word)) {
      auto& a = acc[sub];
      ++a.count;
      a.files.insert(f.path);
      a.projects.insert(f.project_id);
    }
  };
  for (const CodeFile* f : files) {
    for (const auto& tok : tokenize(f->text)) {
      if (tok.is_word()) {
        add_word(tok.text, *f);
      } else if (tok.kind == TokenKind::kComment) {
        // Identifier-like words inside comments (license headers, docs).
        const auto& t = tok.text;
        for (std::size_t i = 0; i < t.size();) {
          if (!is_ident_start(t[i])) {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < t.size() && is_ident_char(t[j])) ++j;
          add_word(t.substr(i, j - i), *f);
          i = j;
        }
      }
    }
  }

  TrieIndex trie;
  std::size_t kept = 0;
  for (const auto& [word, a] : acc) {
    const bool rare = a.projects.size() < options.min_projects;
    const bool short_word = word.size() < options.min_length;
    const bool drop = options.combine == RareFilter::kAnd ? (rare && short_word)
                                                          : (rare || short_word);
    if (drop) continue;
    trie.insert(word, WordStats{a.count, a.files.size(), a.projects.size()});
    ++kept;
  }
  trie.finalize();
  if (stats) *stats = GlobalBuildStats{token_vocab.size(), acc.size(), kept};
  return trie;
}

std::string_view current_subtoken(std::string_view prefix) {
  const auto len = trailing_identifier_length(prefix);
  if (len == 0) return {};
  const auto ident = prefix.substr(prefix.size() - len);
  if (ident.back() == '_') return {};
  const auto parts = subtokens(ident);
  return ident.substr(ident.size() - parts.back().size());
}

std::vector<std::string> GlobalFrequencyStrategy::dimensions() const {
  return {std::string(dims::kGlobalCount), std::string(dims::kGlobalFileCount),
          std::string(dims::kGlobalProjectCount)};
}

std::vector<Candidate> GlobalFrequencyStrategy::query(std::string_view subtoken_prefix,
                                                      std::size_t k) const {
  if (subtoken_prefix.empty() || k == 0) return {};
  // One extra in case the prefix itself is a stored word.
  std::vector<RankedEntry> entries;
  for (auto& m : trie_.lookup(subtoken_prefix, k + 1)) {
    if (m.word.size() == subtoken_prefix.size()) continue;
    if (entries.size() == k) break;
    entries.push_back(RankedEntry{m.word.substr(subtoken_prefix.size()),
                                  {{std::string(dims::kGlobalCount), double(m.stats.count)},
                                   {std::string(dims::kGlobalFileCount), double(m.stats.file_count)},
                                   {std::string(dims::kGlobalProjectCount),
                                    double(m.stats.project_count)}}});
  }
  return make_candidates(id(), std::move(entries));
}

namespace {

class GlobalSession final : public StrategySession {
 public:
  explicit GlobalSession(const GlobalFrequencyStrategy& s) : strategy_(s) {}
  std::string_view id() const override { return strategy_.id(); }
  std::vector<Candidate> query(std::string_view prefix, std::size_t k) override {
    return strategy_.query(current_subtoken(prefix), k);
  }

 private:
  const GlobalFrequencyStrategy& strategy_;
};

}  // namespace

std::unique_ptr<StrategySession> GlobalFrequencyStrategy::new_session() const {
  return std::make_unique<GlobalSession>(*this);
}

std::string GlobalFrequencyStrategy::serialize() const {
  std::string out;
  for (const auto& m : trie_.words())
    out += fmt::format("{}\t{}\t{}\t{}\n", m.word, m.stats.count, m.stats.file_count,
                       m.stats.project_count);
  return out;
}

GlobalFrequencyStrategy GlobalFrequencyStrategy::deserialize(std::string_view text) {
  TrieIndex trie;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    WordStats s;
    if (!(std::getline(ls, word, '\t') >> s.count >> s.file_count >> s.project_count))
      throw Error("global vocabulary: bad line '" + line + "'");
    trie.insert(word, s);
  }
  trie.finalize();
  return GlobalFrequencyStrategy(std::move(trie));
}

}  // namespace cce
