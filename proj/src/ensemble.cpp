#include "cce/ensemble.hpp"

#include "cce/common.hpp"

#include <algorithm>
#include <limits>

namespace cce {

std::string_view to_string(RankMode mode) {
  switch (mode) {
    case RankMode::kFusion: return "fusion";
    case RankMode::kNormalized: return "normalized";
    case RankMode::kUnranked: return "unranked";
  }
  return "?";
}

RankMode rank_mode_from_string(std::string_view name) {
  if (name == "fusion") return RankMode::kFusion;
  if (name == "normalized") return RankMode::kNormalized;
  if (name == "unranked") return RankMode::kUnranked;
  throw ConfigError("unknown ranking mode '" + std::string(name) + "'");
}

std::vector<Scored> rank_normalized(std::span<const Candidate> candidates, const Scaler& scaler,
                                    const std::map<std::string, std::string, std::less<>>& primary) {
  std::vector<Scored> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& s : c.strategies) {
      auto p = primary.find(s);
      if (p == primary.end()) continue;
      auto v = c.scores.find(p->second);
      if (v == c.scores.end()) continue;
      best = std::max(best, scaler.apply(p->second, v->second));
    }
    if (best == -std::numeric_limits<double>::infinity()) best = 0.0;
    out.push_back({c, best});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Scored& a, const Scored& b) { return a.score > b.score; });
  return out;
}

std::vector<Scored> rank_fusion(const ContextFeatures& context,
                                std::span<const Candidate> candidates, const GbdtModel& regressor) {
  std::vector<Scored> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back({c, regressor.predict(extract_candidate(context, c))});
  std::sort(out.begin(), out.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.candidate.length() != b.candidate.length())
      return a.candidate.length() < b.candidate.length();
    return a.candidate.text < b.candidate.text;
  });
  return out;
}

CompletionList complete_from_candidates(std::string_view prefix, std::vector<Candidate> merged,
                                        const PipelineModels& models, const PipelineConfig& cfg) {
  CompletionList list;
  list.mode = cfg.mode;
  if (merged.empty()) {
    list.accepted = false;
    list.accept_probability = 0.0;
    return list;
  }
  std::stable_sort(merged.begin(), merged.end(), [](const Candidate& a, const Candidate& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.text < b.text;
  });
  const auto context = extract_context(prefix);
  list.accepted = true;
  if (cfg.gate) {
    if (cfg.theta <= 0.0) {
      list.accepted = true;
    } else if (cfg.theta >= 1.0) {
      list.accepted = false;
    } else {
      if (!models.acceptance) throw Error("pipeline: gate enabled without an acceptance model");
      list.accept_probability = models.acceptance->predict_proba(extract_set(context, merged));
      list.accepted = list.accept_probability >= cfg.theta;
    }
  }
  std::vector<Scored> ranked;
  switch (cfg.mode) {
    case RankMode::kFusion:
      if (!models.ranking) throw Error("pipeline: fusion mode without a ranking model");
      ranked = rank_fusion(context, merged, *models.ranking);
      break;
    case RankMode::kNormalized:
      if (!models.scaler) throw Error("pipeline: normalized mode without a scaler");
      ranked = rank_normalized(merged, *models.scaler, models.primary);
      break;
    case RankMode::kUnranked:
      // Merge order: best own rank, then strategy id, then text.
      for (auto& c : merge_candidates(std::span<const std::vector<Candidate>>(&merged, 1)))
        ranked.push_back({std::move(c), 0.0});
      break;
  }
  if (ranked.size() > cfg.cap) ranked.resize(cfg.cap);
  for (auto& r : ranked) {
    list.candidates.push_back(std::move(r.candidate));
    list.final_scores.push_back(r.score);
  }
  return list;
}

Pipeline::Pipeline(std::span<const Strategy* const> strategies, const PipelineModels& models,
                   PipelineConfig cfg)
    : sessions_(strategies), models_(models), cfg_(cfg) {}

CompletionList Pipeline::complete(std::string_view prefix) {
  return complete_from_candidates(prefix, sessions_.gather(prefix, cfg_.cap), models_, cfg_);
}

std::map<std::string, std::string, std::less<>> primary_dimensions(
    std::span<const Strategy* const> strategies) {
  std::map<std::string, std::string, std::less<>> out;
  for (const Strategy* s : strategies) out.emplace(std::string(s->id()), s->primary_dimension());
  return out;
}

}  // namespace cce
