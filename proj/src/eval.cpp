#include "cce/eval.hpp"

#include "cce/common.hpp"
#include "cce/lexer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace cce {

SessionLedger replay(std::string_view file, std::string_view text, const CompletionSource& source) {
  SessionLedger ledger;
  ledger.file = std::string(file);
  ledger.n_ori = text.size();
  ledger.cost.assign(text.size(), 1);
  std::unordered_set<std::size_t> token_ends;
  for (const auto& t : tokenize(text)) token_ends.insert(t.end());

  std::size_t p = 0;
  while (p < text.size()) {
    ++ledger.visited;
    ++ledger.n_cc;
    const auto prefix = text.substr(0, p);
    const CompletionList list = source(p, prefix);
    if (list.candidates.empty()) {
      ++p;
      continue;
    }
    CompletionEvent ev;
    ev.position = p;
    ev.shown = list.accepted;
    ev.list_length = list.candidates.size();
    const auto suffix = text.substr(p);
    for (std::size_t r = 0; r < list.candidates.size(); ++r) {
      const auto& c = list.candidates[r];
      if (!is_hit(c, suffix)) continue;
      ev.hit_positions.push_back(static_cast<int>(r + 1));
      if (c.length() > ev.chosen_length) {
        ev.chosen_length = c.length();
        ev.chosen_rank = static_cast<int>(r + 1);
      }
    }
    if (ev.hit()) {
      ev.complete_token = token_ends.count(p + ev.chosen_length) > 0;
      ev.prefix_length = trailing_identifier_length(prefix);
    }
    const bool take = ev.shown && ev.hit();
    ledger.events.push_back(ev);
    if (take) {
      ledger.cost[p] = ev.chosen_rank;
      for (std::size_t q = p + 1; q < p + ev.chosen_length; ++q) ledger.cost[q] = 0;
      p += ev.chosen_length;
    } else {
      if (ev.shown) ledger.cost[p] = static_cast<int>(ev.list_length) + 1;
      ++p;
    }
  }
  return ledger;
}

std::optional<double> accuracy_at_k(std::span<const CompletionEvent> events, int k) {
  if (k < 1) throw Error("accuracy_at_k: K must be >= 1");
  std::size_t shown = 0, hits = 0;
  for (const auto& e : events) {
    if (!e.shown) continue;
    ++shown;
    if (!e.hit_positions.empty() &&
        *std::min_element(e.hit_positions.begin(), e.hit_positions.end()) <= k)
      ++hits;
  }
  if (shown == 0) return std::nullopt;
  return static_cast<double>(hits) / static_cast<double>(shown);
}

long long benefit(const SessionLedger& ledger) {
  return static_cast<long long>(ledger.n_ori) - static_cast<long long>(ledger.n_cc);
}

long long hidden_cost(std::span<const CompletionEvent> events) {
  long long cost = 0;
  for (const auto& e : events) {
    if (!e.shown) continue;
    cost += e.hit() ? e.chosen_rank : static_cast<long long>(e.list_length);
  }
  return cost;
}

std::optional<double> bcr(long long benefit, long long hidden_cost) {
  if (hidden_cost <= 0) return std::nullopt;
  return static_cast<double>(benefit) / static_cast<double>(hidden_cost);
}

std::optional<double> invalid_list_rate(std::span<const CompletionEvent> events) {
  std::size_t shown = 0, invalid = 0;
  for (const auto& e : events) {
    if (!e.shown) continue;
    ++shown;
    invalid += e.hit() ? 0 : 1;
  }
  if (shown == 0) return std::nullopt;
  return static_cast<double>(invalid) / static_cast<double>(shown);
}

double nearest_rank_quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const auto n = static_cast<double>(values.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n));
  rank = std::clamp<std::size_t>(rank, 1, values.size());
  return values[rank - 1];
}

Metrics summarize(std::span<const SessionLedger> ledgers) {
  Metrics m;
  std::vector<CompletionEvent> all;
  std::vector<double> hit_positions;
  double prefix_sum = 0.0;
  std::size_t complete = 0;
  for (const auto& l : ledgers) {
    ++m.files;
    m.n_ori += l.n_ori;
    m.n_cc += l.n_cc;
    m.visited += l.visited;
    m.benefit += benefit(l);
    for (const auto& e : l.events) {
      ++m.lists;
      all.push_back(e);
      if (!e.shown) continue;
      ++m.shown;
      if (!e.hit()) continue;
      ++m.hit_events;
      hit_positions.push_back(e.chosen_rank);
      prefix_sum += static_cast<double>(e.prefix_length);
      complete += e.complete_token ? 1 : 0;
    }
  }
  m.hidden_cost = hidden_cost(all);
  m.accuracy1 = accuracy_at_k(all, 1);
  m.accuracy5 = accuracy_at_k(all, 5);
  m.bcr = bcr(m.benefit, m.hidden_cost);
  m.invalid_list_rate = invalid_list_rate(all);
  if (m.visited > 0) m.occurrence_rate = static_cast<double>(m.shown) / static_cast<double>(m.visited);
  if (!hit_positions.empty()) {
    m.hit_position_p90 = nearest_rank_quantile(hit_positions, 0.9);
    m.mean_prefix_length = prefix_sum / static_cast<double>(m.hit_events);
    m.completeness = static_cast<double>(complete) / static_cast<double>(m.hit_events);
  }
  return m;
}

std::vector<PipelineVariant> ablation_variants(double theta) {
  std::vector<PipelineVariant> out;
  for (bool gate : {false, true})
    for (RankMode mode : {RankMode::kNormalized, RankMode::kFusion}) {
      PipelineConfig cfg;
      cfg.gate = gate;
      cfg.theta = theta;
      cfg.mode = mode;
      out.push_back({std::string(gate ? "acceptance+" : "") + std::string(to_string(mode)), cfg, {}});
    }
  return out;
}

std::vector<PipelineVariant> strategy_variants(std::span<const std::string> strategy_ids) {
  std::vector<PipelineVariant> out;
  for (const auto& s : strategy_ids) {
    PipelineConfig cfg;
    cfg.gate = false;
    cfg.mode = RankMode::kUnranked;
    out.push_back({"strategy:" + s, cfg, s});
  }
  return out;
}

std::vector<Candidate> own_list(std::span<const Candidate> merged, std::string_view strategy) {
  std::vector<Candidate> out;
  for (const auto& c : merged) {
    auto r = c.ranks.find(strategy);
    if (r == c.ranks.end()) continue;
    Candidate own;
    own.text = c.text;
    own.strategies = {std::string(strategy)};
    own.ranks.emplace(std::string(strategy), r->second);
    for (const auto& [d, v] : c.scores) own.scores.emplace(d, v);
    out.push_back(std::move(own));
  }
  std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    return a.ranks.begin()->second < b.ranks.begin()->second;
  });
  return out;
}

std::vector<SessionLedger> evaluate_store(std::span<const StoredFile> store,
                                          const PipelineModels& models,
                                          const PipelineVariant& variant, std::size_t workers) {
  std::vector<SessionLedger> out(store.size());
  parallel_for(store.size(), workers, [&](std::size_t i) {
    const auto& f = store[i];
    const auto& samples = f.samples.samples;
    if (samples.size() != f.text.size())
      throw Error(fmt::format("eval: {} has {} samples for {} characters", f.samples.file,
                              samples.size(), f.text.size()));
    out[i] = replay(f.samples.file, f.text, [&](std::size_t pos, std::string_view prefix) {
      const auto& merged = samples[pos].candidates;
      if (!variant.only_strategy.empty())
        return complete_from_candidates(prefix, own_list(merged, variant.only_strategy), models,
                                        variant.cfg);
      return complete_from_candidates(prefix, merged, models, variant.cfg);
    });
  });
  return out;
}

namespace {

std::string opt(const std::optional<double>& v) {
  return v ? fmt::format("{:.6f}", *v) : std::string("n/a");
}

}  // namespace

std::string metrics_csv_header() {
  return "pipeline,files,n_ori,n_cc,visited,shown,hit_events,benefit,hidden_cost,accuracy_at_1,"
         "accuracy_at_5,bcr,invalid_list_rate,occurrence_rate,hit_position_p90,"
         "mean_prefix_length,completeness\n";
}

std::string metrics_csv_row(std::string_view name, const Metrics& m) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", name, m.files, m.n_ori,
                     m.n_cc, m.visited, m.shown, m.hit_events, m.benefit, m.hidden_cost,
                     opt(m.accuracy1), opt(m.accuracy5), opt(m.bcr), opt(m.invalid_list_rate),
                     opt(m.occurrence_rate), opt(m.hit_position_p90), opt(m.mean_prefix_length),
                     opt(m.completeness));
}

std::string spectrum_csv(const SessionLedger& ledger) {
  std::string out = "position,cost\n";
  for (std::size_t i = 0; i < ledger.cost.size(); ++i) out += fmt::format("{},{}\n", i, ledger.cost[i]);
  return out;
}

}  // namespace cce
