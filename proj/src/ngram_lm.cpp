#include "cce/ngram_lm.hpp"

#include "cce/common.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <sstream>

namespace cce {

std::string NgramModel::key(std::span<const TokenId> ids) {
  std::string k(ids.size() * sizeof(TokenId), '\0');
  if (!ids.empty()) std::memcpy(k.data(), ids.data(), k.size());
  return k;
}

NgramModel NgramModel::train(std::span<const std::vector<TokenId>> sequences,
                             std::size_t vocab_size, std::size_t order, double backoff) {
  if (order < 1) throw Error("lm_train: order must be >= 1");
  if (vocab_size == 0) throw Error("lm_train: empty vocabulary");
  if (!(backoff > 0.0 && backoff < 1.0)) throw Error("lm_train: backoff must be in (0,1)");
  NgramModel m;
  m.order_ = order;
  m.vocab_size_ = vocab_size;
  m.backoff_ = backoff;
  m.levels_.resize(order);
  std::vector<TokenId> full;
  for (const auto& seq : sequences) {
    full.assign(1, m.bos());
    full.insert(full.end(), seq.begin(), seq.end());
    for (std::size_t i = 1; i < full.size(); ++i) {
      if (full[i] >= vocab_size) throw Error(fmt::format("lm_train: token id {} out of range", full[i]));
      const std::size_t max_len = std::min(order - 1, i);
      for (std::size_t len = 0; len <= max_len; ++len)
        m.add(std::span(full).subspan(i - len, len), full[i], 1);
    }
  }
  m.finalize();
  return m;
}

void NgramModel::add(std::span<const TokenId> history, TokenId w, std::uint32_t count) {
  auto& ctx = levels_[history.size()][key(history)];
  auto it = std::lower_bound(ctx.by_id.begin(), ctx.by_id.end(), w,
                             [](const auto& p, TokenId x) { return p.first < x; });
  if (it != ctx.by_id.end() && it->first == w)
    it->second += count;
  else
    ctx.by_id.insert(it, {w, count});
  ctx.total += count;
}

void NgramModel::finalize() {
  unigram_total_ = 0;
  if (auto it = levels_[0].find(std::string()); it != levels_[0].end())
    unigram_total_ = it->second.total;
  for (std::size_t len = 0; len < levels_.size(); ++len) {
    for (auto& [k, ctx] : levels_[len]) {
      ctx.by_count = ctx.by_id;
      std::sort(ctx.by_count.begin(), ctx.by_count.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
      });
      if (len == 0) {
        ctx.z = 1.0;
        continue;
      }
      std::vector<TokenId> hist(len);
      std::memcpy(hist.data(), k.data(), k.size());
      const auto shorter = std::span<const TokenId>(hist).subspan(1);
      double covered = 0.0;
      for (const auto& [w, c] : ctx.by_id) covered += score(shorter, w);
      const Context* parent = find(shorter);
      const double parent_z = parent ? parent->z : 1.0;
      ctx.z = 1.0 + backoff_ * std::max(0.0, parent_z - covered);
    }
  }
}

const NgramModel::Context* NgramModel::find(std::span<const TokenId> history) const {
  if (history.size() >= levels_.size()) return nullptr;
  const auto& level = levels_[history.size()];
  auto it = level.find(key(history));
  return it == level.end() ? nullptr : &it->second;
}

std::uint32_t NgramModel::count_of(const Context& ctx, TokenId w) {
  auto it = std::lower_bound(ctx.by_id.begin(), ctx.by_id.end(), w,
                             [](const auto& p, TokenId x) { return p.first < x; });
  return it != ctx.by_id.end() && it->first == w ? it->second : 0;
}

std::span<const TokenId> NgramModel::effective(std::span<const TokenId> history) const {
  std::size_t len = std::min(history.size(), order_ - 1);
  for (; len > 0; --len) {
    const auto h = history.last(len);
    if (find(h) != nullptr) return h;
  }
  return {};
}

double NgramModel::score(std::span<const TokenId> eff, TokenId w) const {
  double m = 1.0;
  for (std::size_t len = eff.size(); len >= 1; --len) {
    const Context* ctx = find(eff.last(len));
    if (ctx != nullptr) {
      if (const auto c = count_of(*ctx, w); c > 0)
        return m * static_cast<double>(c) / static_cast<double>(ctx->total);
    }
    m *= backoff_;
  }
  std::uint32_t c = 0;
  if (const Context* uni = find({})) c = count_of(*uni, w);
  return m * (static_cast<double>(c) + 1.0) /
         static_cast<double>(unigram_total_ + vocab_size_);
}

double NgramModel::logprob(std::span<const TokenId> history, TokenId next) const {
  if (next >= vocab_size_) throw Error(fmt::format("lm: token id {} out of range", next));
  const auto eff = effective(history);
  const Context* ctx = eff.empty() ? nullptr : find(eff);
  const double z = ctx ? ctx->z : 1.0;
  return std::log(score(eff, next)) - std::log(z);
}

double NgramModel::relative_frequency(std::span<const TokenId> history, TokenId next) const {
  const auto eff = effective(history);
  const Context* ctx = find(eff);
  if (ctx == nullptr || ctx->total == 0) return 0.0;
  return static_cast<double>(count_of(*ctx, next)) / static_cast<double>(ctx->total);
}

std::vector<ScoredToken> NgramModel::top_next(std::span<const TokenId> history,
                                              std::size_t k) const {
  if (k == 0 || vocab_size_ == 0) return {};
  const auto eff = effective(history);
  const std::size_t top_len = eff.size();
  std::vector<const Context*> ctxs(top_len + 1, nullptr);
  for (std::size_t len = 0; len <= top_len; ++len) ctxs[len] = find(eff.last(len));

  struct Scored {
    TokenId id;
    double s;
  };
  std::vector<Scored> best;
  auto before = [](const Scored& a, const Scored& b) {
    return a.s != b.s ? a.s > b.s : a.id < b.id;
  };
  auto kth = [&] {
    return best.size() < k ? -std::numeric_limits<double>::infinity() : best.back().s;
  };
  auto offer = [&](TokenId id, double s) {
    Scored x{id, s};
    if (best.size() == k && !before(x, best.back())) return;
    best.insert(std::upper_bound(best.begin(), best.end(), x, before), x);
    if (best.size() > k) best.pop_back();
  };
  auto decided_above = [&](TokenId w, std::size_t len) {
    for (std::size_t l = len + 1; l <= top_len; ++l)
      if (ctxs[l] && count_of(*ctxs[l], w) > 0) return true;
    return false;
  };

  double m = 1.0;
  bool done = false;
  for (std::size_t len = top_len; len >= 1 && !done; --len) {
    if (const Context* ctx = ctxs[len]) {
      const double total = static_cast<double>(ctx->total);
      for (const auto& [w, c] : ctx->by_count) {
        const double s = m * static_cast<double>(c) / total;
        if (best.size() == k && s < kth()) break;
        if (!decided_above(w, len)) offer(w, s);
      }
    }
    m *= backoff_;
    // Anything decided at a lower level scores at most m.
    if (best.size() == k && kth() > m) done = true;
  }
  if (!done) {
    const double denom = static_cast<double>(unigram_total_ + vocab_size_);
    const Context* uni = ctxs[0];
    if (uni) {
      for (const auto& [w, c] : uni->by_count) {
        const double s = m * (static_cast<double>(c) + 1.0) / denom;
        if (best.size() == k && s < kth()) break;
        if (!decided_above(w, 0)) offer(w, s);
      }
    }
    const double unseen = m / denom;
    if (best.size() < k || unseen >= kth()) {
      for (TokenId w = 0; w < vocab_size_; ++w) {
        if (best.size() == k && unseen <= kth()) break;
        if (uni && count_of(*uni, w) > 0) continue;
        if (decided_above(w, 0)) continue;
        offer(w, unseen);
      }
    }
  }

  const Context* top = top_len > 0 ? ctxs[top_len] : nullptr;
  const double log_z = std::log(top ? top->z : 1.0);
  std::vector<ScoredToken> out;
  out.reserve(best.size());
  for (const auto& b : best) out.push_back({b.id, std::log(b.s) - log_z});
  return out;
}

std::size_t NgramModel::context_count() const {
  std::size_t n = 0;
  for (const auto& level : levels_) n += level.size();
  return n;
}

std::string NgramModel::serialize() const {
  std::string out = fmt::format("ngram order={} vocab={} backoff={}\n", order_, vocab_size_,
                                fmt::format("{:.17g}", backoff_));
  for (std::size_t len = 0; len < levels_.size(); ++len) {
    std::map<std::string, const Context*> sorted;
    for (const auto& [k, ctx] : levels_[len]) sorted.emplace(k, &ctx);
    for (const auto& [k, ctx] : sorted) {
      std::vector<TokenId> hist(len);
      if (len) std::memcpy(hist.data(), k.data(), k.size());
      std::string h;
      for (auto id : hist) h += fmt::format(" {}", id);
      for (const auto& [w, c] : ctx->by_id) out += fmt::format("{}{} {}\n", c, h, w);
    }
  }
  return out;
}

NgramModel NgramModel::deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  std::getline(in, header);
  NgramModel m;
  if (std::sscanf(header.c_str(), "ngram order=%zu vocab=%zu backoff=%lf", &m.order_,
                  &m.vocab_size_, &m.backoff_) != 3 ||
      m.order_ < 1)
    throw Error("ngram: bad header '" + header + "'");
  m.levels_.resize(m.order_);
  std::string line;
  std::vector<TokenId> ids;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::uint32_t count = 0;
    ls >> count;
    ids.clear();
    TokenId id;
    while (ls >> id) ids.push_back(id);
    if (ids.empty() || ids.size() > m.order_) throw Error("ngram: bad line '" + line + "'");
    const auto w = ids.back();
    ids.pop_back();
    m.add(ids, w, count);
  }
  m.finalize();
  return m;
}

std::string_view BpeNgramModel::token_text(TokenId id) const {
  if (id >= bpe_.vocab_size()) return {};
  return bpe_.token(id);
}

}  // namespace cce
