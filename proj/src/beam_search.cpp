#include "cce/beam_search.hpp"

#include "cce/common.hpp"

#include <algorithm>
#include <chrono>

namespace cce {

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kThreshold: return "threshold";
    case StopReason::kEndOfLine: return "end_of_line";
    case StopReason::kComment: return "comment";
    case StopReason::kLoop: return "loop";
    case StopReason::kMaxSteps: return "max_steps";
    case StopReason::kBudget: return "budget";
  }
  return "?";
}

namespace {

bool beam_before(const Beam& a, const Beam& b) {
  if (a.logprob != b.logprob) return a.logprob > b.logprob;
  return a.tokens < b.tokens;
}

bool forms_comment(char before, std::string_view text) {
  if (text.find('#') != std::string_view::npos) return true;
  if (text.find("//") != std::string_view::npos || text.find("/*") != std::string_view::npos)
    return true;
  return before == '/' && !text.empty() && (text[0] == '/' || text[0] == '*');
}

bool closes_loop(const std::vector<TokenId>& tokens, std::size_t m) {
  if (m == 0 || tokens.size() <= m) return false;
  const auto last = tokens.end() - static_cast<std::ptrdiff_t>(m);
  for (std::size_t start = 0; start + m < tokens.size(); ++start)
    if (std::equal(last, tokens.end(), tokens.begin() + static_cast<std::ptrdiff_t>(start)))
      return true;
  return false;
}

}  // namespace

std::vector<Beam> beam_search(const TokenModel& model, std::span<const TokenId> context,
                              const BeamConfig& cfg, BeamStats* stats,
                              std::string_view context_tail) {
  if (cfg.k < 1) throw ConfigError("beam_search: k must be >= 1");
  if (cfg.max_steps < 1) throw ConfigError("beam_search: max_steps must be >= 1");
  BeamStats local;
  BeamStats& st = stats ? *stats : local;
  st = BeamStats{};
  const auto started = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    if (cfg.time_budget_ms <= 0) return false;
    const auto elapsed = std::chrono::steady_clock::now() - started;
    return std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() >=
           cfg.time_budget_ms;
  };
  const char before = context_tail.empty() ? '\0' : context_tail.back();

  std::vector<Beam> results;
  std::vector<Beam> pool;
  std::vector<TokenId> history(context.begin(), context.end());
  for (const auto& next : model.top_next(history, cfg.k)) {
    Beam b;
    b.tokens = {next.id};
    b.logprob = next.logprob;
    b.text = std::string(model.token_text(next.id));
    pool.push_back(std::move(b));
  }
  st.prefill = 1;

  while (!pool.empty()) {
    std::sort(pool.begin(), pool.end(), beam_before);
    if (pool.size() > cfg.k) pool.resize(cfg.k);
    std::vector<Beam> batch;
    for (auto& b : pool) {
      const std::string_view added = b.text;
      if (b.logprob < cfg.t) {
        b.reason = StopReason::kThreshold;
        st.dropped.push_back(std::move(b));
      } else if (!b.tokens.empty() &&
                 model.token_text(b.tokens.back()).find('\n') != std::string_view::npos) {
        b.reason = StopReason::kEndOfLine;
        results.push_back(std::move(b));
      } else if (forms_comment(before, added)) {
        b.reason = StopReason::kComment;
        st.dropped.push_back(std::move(b));
      } else if (closes_loop(b.tokens, cfg.loop_window)) {
        b.reason = StopReason::kLoop;
        st.dropped.push_back(std::move(b));
      } else if (b.tokens.size() >= cfg.max_steps) {
        b.reason = StopReason::kMaxSteps;
        results.push_back(std::move(b));
      } else {
        batch.push_back(std::move(b));
      }
    }
    pool.clear();
    if (batch.empty()) break;
    if (out_of_time()) {
      st.budget_exhausted = true;
      for (auto& b : batch) {
        b.reason = StopReason::kBudget;
        results.push_back(std::move(b));
      }
      break;
    }
    st.batch_sizes.push_back(batch.size());
    for (const auto& b : batch) {
      history.resize(context.size());
      history.insert(history.end(), b.tokens.begin(), b.tokens.end());
      ++st.evaluations;
      for (const auto& next : model.top_next(history, cfg.k)) {
        Beam c;
        c.tokens = b.tokens;
        c.tokens.push_back(next.id);
        c.logprob = b.logprob + next.logprob;
        c.text = b.text + std::string(model.token_text(next.id));
        pool.push_back(std::move(c));
      }
    }
  }
  std::sort(results.begin(), results.end(), beam_before);
  return results;
}

}  // namespace cce
