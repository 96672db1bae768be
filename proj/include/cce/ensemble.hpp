#pragma once

#include "cce/candidate.hpp"
#include "cce/feature.hpp"
#include "cce/gbdt.hpp"
#include "cce/simulate.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

enum class RankMode { kFusion, kNormalized, kUnranked };

std::string_view to_string(RankMode mode);
RankMode rank_mode_from_string(std::string_view name);

struct PipelineConfig {
  double theta = 0.5;  // acceptance threshold
  bool gate = true;
  RankMode mode = RankMode::kFusion;
  std::size_t cap = kMaxCandidatesPerStrategy;
};

struct CompletionList {
  std::vector<Candidate> candidates;  // final order, at most cap
  std::vector<double> final_scores;
  RankMode mode = RankMode::kUnranked;
  bool accepted = false;
  double accept_probability = 1.0;
};

// Models shared by every session. Pointers may be null when the mode or
// gate does not need them.
struct PipelineModels {
  const GbdtModel* acceptance = nullptr;
  const GbdtModel* ranking = nullptr;
  const Scaler* scaler = nullptr;
  std::map<std::string, std::string, std::less<>> primary;  // strategy -> dimension
};

struct Scored {
  Candidate candidate;
  double score;
};

// Descending z-score of each candidate's own primary dimension (the best
// over its strategies). Stable: equal scores keep the input order.
std::vector<Scored> rank_normalized(std::span<const Candidate> candidates, const Scaler& scaler,
                                    const std::map<std::string, std::string, std::less<>>& primary);

// Descending predicted benefit; equal scores go shorter text first, then
// lexicographic, so the input order never matters.
std::vector<Scored> rank_fusion(const ContextFeatures& context,
                                std::span<const Candidate> candidates, const GbdtModel& regressor);

// Gate then rank an already merged candidate set.
CompletionList complete_from_candidates(std::string_view prefix, std::vector<Candidate> merged,
                                        const PipelineModels& models, const PipelineConfig& cfg);

// gather -> merge -> gate -> rank over live strategy sessions.
class Pipeline {
 public:
  Pipeline(std::span<const Strategy* const> strategies, const PipelineModels& models,
           PipelineConfig cfg);
  CompletionList complete(std::string_view prefix);

 private:
  SessionSet sessions_;
  const PipelineModels& models_;
  PipelineConfig cfg_;
};

std::map<std::string, std::string, std::less<>> primary_dimensions(
    std::span<const Strategy* const> strategies);

}  // namespace cce
