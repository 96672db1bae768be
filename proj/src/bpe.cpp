#include "cce/bpe.hpp"

#include "cce/common.hpp"
#include "cce/lexer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_set>

namespace cce {
namespace {

std::uint64_t pair_key(TokenId a, TokenId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string escape_symbol(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case ' ': out += "\\s"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string unescape_symbol(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '\\' || i + 1 == s.size()) {
      out.push_back(s[i]);
      continue;
    }
    switch (s[++i]) {
      case 's': out.push_back(' '); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case '\\': out.push_back('\\'); break;
      default: throw Error(fmt::format("bad escape in bpe symbol '{}'", s));
    }
  }
  return out;
}

// Replaces every left-to-right occurrence of (a, b) with c. Returns true if
// anything changed.
bool merge_in_place(std::vector<TokenId>& syms, TokenId a, TokenId b, TokenId c) {
  bool changed = false;
  std::size_t w = 0;
  for (std::size_t r = 0; r < syms.size();) {
    if (r + 1 < syms.size() && syms[r] == a && syms[r + 1] == b) {
      syms[w++] = c;
      r += 2;
      changed = true;
    } else {
      syms[w++] = syms[r++];
    }
  }
  syms.resize(w);
  return changed;
}

}  // namespace

BpeModel BpeModel::train(std::span<const std::string> texts,
                         std::size_t vocab_size, bool ascii_base) {
  std::map<std::string, std::uint64_t> word_counts;
  std::array<bool, 256> seen{};
  if (ascii_base) {
    for (int b = 0x20; b < 0x7f; ++b) seen[b] = true;
    seen['\t'] = seen['\n'] = true;
  }
  for (const auto& text : texts) {
    for (const auto& tok : tokenize(text)) {
      ++word_counts[std::string(tok.text)];
      for (unsigned char c : tok.text) seen[c] = true;
    }
  }
  if (word_counts.empty()) throw Error("bpe_train: empty corpus");

  BpeModel model;
  for (int b = 0; b < 256; ++b)
    if (seen[b]) model.vocab_.emplace_back(1, static_cast<char>(b));
  model.base_size_ = model.vocab_.size();
  if (vocab_size < model.base_size_)
    throw Error(fmt::format("bpe_train: vocab_size {} below base symbol count {}",
                            vocab_size, model.base_size_));
  model.index();

  struct Word {
    std::vector<TokenId> syms;
    std::uint64_t count;
  };
  std::vector<Word> words;
  words.reserve(word_counts.size());
  for (const auto& [w, count] : word_counts) {
    Word word{{}, count};
    for (unsigned char c : w) word.syms.push_back(static_cast<TokenId>(model.byte_ids_[c]));
    words.push_back(std::move(word));
  }

  std::unordered_map<std::uint64_t, std::int64_t> pair_counts;
  std::unordered_map<std::uint64_t, std::unordered_set<std::uint32_t>> where;
  auto add_pairs = [&](std::uint32_t wi, std::int64_t sign) {
    const auto& w = words[wi];
    for (std::size_t i = 0; i + 1 < w.syms.size(); ++i) {
      const auto key = pair_key(w.syms[i], w.syms[i + 1]);
      pair_counts[key] += sign * static_cast<std::int64_t>(w.count);
      if (sign > 0) where[key].insert(wi);
    }
  };
  for (std::uint32_t wi = 0; wi < words.size(); ++wi) add_pairs(wi, +1);

  while (model.vocab_.size() < vocab_size) {
    std::uint64_t best = 0;
    std::int64_t best_count = 0;
    for (const auto& [key, count] : pair_counts) {
      if (count <= 0) continue;
      if (count > best_count) {
        best = key;
        best_count = count;
        continue;
      }
      if (count < best_count) continue;
      // Tie: lexicographically smallest (left, right) symbol pair.
      const auto& l = model.vocab_[key >> 32];
      const auto& r = model.vocab_[key & 0xffffffffu];
      const auto& bl = model.vocab_[best >> 32];
      const auto& br = model.vocab_[best & 0xffffffffu];
      if (std::tie(l, r) < std::tie(bl, br)) best = key;
    }
    if (best_count <= 0) break;

    const auto a = static_cast<TokenId>(best >> 32);
    const auto b = static_cast<TokenId>(best & 0xffffffffu);
    // Two merge paths can spell the same string; symbols are identified by
    // their text so the later merge reuses the existing id.
    auto merged = model.vocab_[a] + model.vocab_[b];
    model.merges_.emplace_back(model.vocab_[a], model.vocab_[b]);
    TokenId c;
    if (auto it = model.ids_.find(merged); it != model.ids_.end()) {
      c = it->second;
    } else {
      c = static_cast<TokenId>(model.vocab_.size());
      model.ids_.emplace(merged, c);
      model.vocab_.push_back(std::move(merged));
    }

    auto affected = std::move(where[best]);
    where.erase(best);
    std::vector<std::uint32_t> order(affected.begin(), affected.end());
    std::sort(order.begin(), order.end());
    for (auto wi : order) {
      add_pairs(wi, -1);
      merge_in_place(words[wi].syms, a, b, c);
      add_pairs(wi, +1);
    }
    for (auto it = pair_counts.begin(); it != pair_counts.end();) {
      if (it->second <= 0) {
        where.erase(it->first);
        it = pair_counts.erase(it);
      } else {
        ++it;
      }
    }
  }
  model.index();
  return model;
}

void BpeModel::index() {
  ids_.clear();
  ranks_.clear();
  byte_ids_.assign(256, -1);
  for (TokenId id = 0; id < vocab_.size(); ++id) ids_.emplace(vocab_[id], id);
  for (TokenId id = 0; id < base_size_; ++id)
    byte_ids_[static_cast<unsigned char>(vocab_[id][0])] = static_cast<int>(id);
  for (std::uint32_t rank = 0; rank < merges_.size(); ++rank) {
    const auto& [l, r] = merges_[rank];
    const auto key = pair_key(ids_.at(l), ids_.at(r));
    ranks_.emplace(key, std::make_pair(rank, ids_.at(l + r)));
  }
}

std::optional<TokenId> BpeModel::id_of(std::string_view symbol) const {
  auto it = ids_.find(std::string(symbol));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void BpeModel::encode_word(std::string_view word, std::vector<TokenId>& out) const {
  std::vector<TokenId> syms;
  syms.reserve(word.size());
  for (unsigned char c : word) {
    const int id = byte_ids_.empty() ? -1 : byte_ids_[c];
    if (id < 0) throw Error(fmt::format("bpe_encode: byte 0x{:02x} not in vocabulary", c));
    syms.push_back(static_cast<TokenId>(id));
  }
  while (syms.size() > 1) {
    std::uint32_t best_rank = std::numeric_limits<std::uint32_t>::max();
    TokenId a = 0, b = 0, c = 0;
    for (std::size_t i = 0; i + 1 < syms.size(); ++i) {
      auto it = ranks_.find(pair_key(syms[i], syms[i + 1]));
      if (it != ranks_.end() && it->second.first < best_rank) {
        best_rank = it->second.first;
        a = syms[i];
        b = syms[i + 1];
        c = it->second.second;
      }
    }
    if (best_rank == std::numeric_limits<std::uint32_t>::max()) break;
    merge_in_place(syms, a, b, c);
  }
  out.insert(out.end(), syms.begin(), syms.end());
}

std::vector<TokenId> BpeModel::encode(std::string_view text) const {
  std::vector<TokenId> out;
  for (const auto& tok : tokenize(text)) encode_word(tok.text, out);
  return out;
}

std::string BpeModel::decode(std::span<const TokenId> ids) const {
  std::string out;
  for (auto id : ids) {
    if (id >= vocab_.size())
      throw Error(fmt::format("bpe_decode: id {} out of vocabulary ({})", id, vocab_.size()));
    out += vocab_[id];
  }
  return out;
}

std::string BpeModel::serialize() const {
  std::string base;
  for (std::size_t i = 0; i < base_size_; ++i)
    base += fmt::format("{:02x}", static_cast<unsigned char>(vocab_[i][0]));
  std::string out = fmt::format("bpe vocab_size={} base={}\n", vocab_.size(), base);
  for (const auto& [l, r] : merges_)
    out += escape_symbol(l) + " " + escape_symbol(r) + "\n";
  return out;
}

BpeModel BpeModel::deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::getline(in, header);
  std::size_t vocab_size = 0;
  char base_hex[600] = {};
  if (std::sscanf(header.c_str(), "bpe vocab_size=%zu base=%599s", &vocab_size, base_hex) != 2)
    throw Error("bpe: bad header '" + header + "'");
  BpeModel model;
  const std::string_view hex(base_hex);
  for (std::size_t i = 0; i + 1 < hex.size(); i += 2) {
    const auto byte = static_cast<char>(std::stoi(std::string(hex.substr(i, 2)), nullptr, 16));
    model.vocab_.emplace_back(1, byte);
  }
  model.base_size_ = model.vocab_.size();
  std::string line;
  std::unordered_set<std::string> known(model.vocab_.begin(), model.vocab_.end());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos) throw Error("bpe: bad merge line '" + line + "'");
    auto l = unescape_symbol(std::string_view(line).substr(0, sp));
    auto r = unescape_symbol(std::string_view(line).substr(sp + 1));
    if (!known.count(l) || !known.count(r))
      throw Error("bpe: merge references unknown symbol in '" + line + "'");
    if (known.insert(l + r).second) model.vocab_.push_back(l + r);
    model.merges_.emplace_back(std::move(l), std::move(r));
  }
  if (model.vocab_.size() != vocab_size)
    throw Error(fmt::format("bpe: header says {} symbols, file has {}", vocab_size,
                            model.vocab_.size()));
  model.index();
  return model;
}

}  // namespace cce
