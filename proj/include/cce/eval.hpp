#pragma once

#include "cce/ensemble.hpp"
#include "cce/simulate.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

struct CompletionEvent {
  std::size_t position = 0;
  bool shown = false;
  std::size_t list_length = 0;
  std::vector<int> hit_positions;  // 1-based ranks of every correct candidate
  int chosen_rank = 0;             // rank of the longest correct candidate, 0 if none
  std::size_t chosen_length = 0;
  bool complete_token = false;     // chosen candidate ends on a token boundary
  std::size_t prefix_length = 0;   // identifier characters typed before the event

  bool hit() const { return chosen_rank > 0; }
};

// Every position the replay visits costs one keystroke: either a manual tap
// or the tap selecting a completion, which then covers its whole length.
// Events hold every non-empty list, shown or blocked.
struct SessionLedger {
  std::string file;
  std::size_t n_ori = 0;
  std::size_t n_cc = 0;
  std::size_t visited = 0;
  std::vector<CompletionEvent> events;
  std::vector<int> cost;  // per character, 0..6
};

using CompletionSource = std::function<CompletionList(std::size_t pos, std::string_view prefix)>;

// The cursor sweeps `text`. A shown list with a correct candidate selects
// the longest one (best rank among equals) and the cursor jumps past it;
// otherwise one character is typed.
SessionLedger replay(std::string_view file, std::string_view text, const CompletionSource& source);

std::optional<double> accuracy_at_k(std::span<const CompletionEvent> events, int k);
long long benefit(const SessionLedger& ledger);
long long hidden_cost(std::span<const CompletionEvent> events);
std::optional<double> bcr(long long benefit, long long hidden_cost);
std::optional<double> invalid_list_rate(std::span<const CompletionEvent> events);

// Smallest value with at least q of the data at or below it.
double nearest_rank_quantile(std::vector<double> values, double q);

struct Metrics {
  std::size_t files = 0;
  std::size_t n_ori = 0;
  std::size_t n_cc = 0;
  std::size_t visited = 0;
  std::size_t lists = 0;    // non-empty lists produced
  std::size_t shown = 0;
  std::size_t hit_events = 0;
  long long benefit = 0;
  long long hidden_cost = 0;
  std::optional<double> accuracy1;
  std::optional<double> accuracy5;
  std::optional<double> bcr;
  std::optional<double> invalid_list_rate;
  // Strategy characteristics.
  std::optional<double> occurrence_rate;       // shown lists / visited positions
  std::optional<double> hit_position_p90;
  std::optional<double> mean_prefix_length;    // at accepted completions
  std::optional<double> completeness;
};

Metrics summarize(std::span<const SessionLedger> ledgers);

struct PipelineVariant {
  std::string name;
  PipelineConfig cfg;
  std::string only_strategy;  // non-empty: that strategy's own list, unranked, no gate
};

// normalized, fusion, acceptance+normalized, acceptance+fusion.
std::vector<PipelineVariant> ablation_variants(double theta);
std::vector<PipelineVariant> strategy_variants(std::span<const std::string> strategy_ids);

// One strategy's own list recovered from a merged candidate set.
std::vector<Candidate> own_list(std::span<const Candidate> merged, std::string_view strategy);

// Replays stored candidate sets through a pipeline variant.
std::vector<SessionLedger> evaluate_store(std::span<const StoredFile> store,
                                          const PipelineModels& models,
                                          const PipelineVariant& variant, std::size_t workers = 1);

std::string metrics_csv_header();
std::string metrics_csv_row(std::string_view name, const Metrics& m);
std::string spectrum_csv(const SessionLedger& ledger);

}  // namespace cce
