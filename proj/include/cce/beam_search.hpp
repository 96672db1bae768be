#pragma once

#include "cce/ngram_lm.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

struct BeamConfig {
  std::size_t k = 5;               // beam size
  double t = -3.0;                 // aggregate logprob threshold
  std::size_t max_steps = 12;      // generated tokens per sequence
  std::int64_t time_budget_ms = 0;  // 0 = unlimited
  std::size_t loop_window = 4;
};

enum class StopReason { kThreshold, kEndOfLine, kComment, kLoop, kMaxSteps, kBudget };

std::string_view to_string(StopReason reason);

struct Beam {
  std::vector<TokenId> tokens;
  double logprob = 0.0;
  std::string text;
  StopReason reason = StopReason::kMaxSteps;
};

struct BeamStats {
  std::size_t prefill = 0;       // evaluations of the context itself
  std::size_t evaluations = 0;   // evaluations of generated beams
  std::vector<std::size_t> batch_sizes;
  std::vector<Beam> dropped;     // terminated by threshold, comment or loop
  bool budget_exhausted = false;
};

// Dynamic beam search. Every step expands each live beam by its top-k next
// tokens, keeps the global top-k of the pool (logprob desc, then token ids)
// and terminates sequences that
//   (a) fall below t               -> dropped
//   (b) emit a token containing \n -> returned
//   (c) form "//", "/*" or "#"     -> dropped
//   (d) repeat an earlier window of the last `loop_window` tokens -> dropped
//   (e) reach max_steps tokens     -> returned
// Survivors form the next batch. `context_tail` is the text just before the
// cursor; its last character takes part in rule (c).
std::vector<Beam> beam_search(const TokenModel& model, std::span<const TokenId> context,
                              const BeamConfig& cfg, BeamStats* stats = nullptr,
                              std::string_view context_tail = {});

}  // namespace cce
