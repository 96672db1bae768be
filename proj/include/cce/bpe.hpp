#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cce {

using TokenId = std::uint32_t;

inline constexpr std::size_t kLargeBpeVocabSize = 30000;
inline constexpr std::size_t kDefaultBpeVocabSize = 4096;

// Byte-pair encoding over lexer words. Merges never cross a lexer token
// boundary, so decoding is plain concatenation. Ids 0..base-1 are the base
// bytes in ascending byte order; merged symbols follow in creation order.
// Symbols are identified by their text, so two merges spelling the same
// string share one id.
class BpeModel {
 public:
  BpeModel() = default;

  // The base alphabet is every byte of `texts`, plus printable ASCII, tab
  // and newline when `ascii_base` is set, so any preprocessed text encodes.
  // Throws if `vocab_size` is smaller than the base alphabet.
  static BpeModel train(std::span<const std::string> texts,
                        std::size_t vocab_size, bool ascii_base = true);

  std::vector<TokenId> encode(std::string_view text) const;
  std::string decode(std::span<const TokenId> ids) const;

  std::size_t vocab_size() const { return vocab_.size(); }
  std::size_t base_size() const { return base_size_; }
  const std::vector<std::pair<std::string, std::string>>& merges() const {
    return merges_;
  }
  const std::string& token(TokenId id) const { return vocab_.at(id); }
  std::optional<TokenId> id_of(std::string_view symbol) const;

  // Line 1: "bpe vocab_size=<n> base=<hex of base bytes>", then one merge per
  // line as two space-separated symbols (space, tab, newline and backslash
  // are backslash-escaped).
  std::string serialize() const;
  static BpeModel deserialize(std::string_view text);

 private:
  void index();
  void encode_word(std::string_view word, std::vector<TokenId>& out) const;

  std::size_t base_size_ = 0;
  std::vector<std::string> vocab_;
  std::vector<std::pair<std::string, std::string>> merges_;
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<int> byte_ids_;  // byte -> base id, -1 if absent
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, TokenId>> ranks_;
};

}  // namespace cce
