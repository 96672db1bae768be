#pragma once

#include "cce/feature.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

// Row-major feature matrix with targets.
struct Dataset {
  std::vector<std::string> feature_names;
  std::uint64_t schema_version = 0;
  std::vector<double> x;
  std::vector<double> y;

  std::size_t features() const { return feature_names.size(); }
  std::size_t rows() const { return y.size(); }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(x).subspan(i * features(), features());
  }
  void add(std::span<const double> values, double target);
};

enum class Objective { kLogistic, kSquaredError };

std::string_view to_string(Objective o);
Objective objective_from_string(std::string_view name);

struct GbdtParams {
  std::size_t n_trees = 100;
  std::size_t max_depth = 6;
  double learning_rate = 0.1;
  std::size_t min_samples_leaf = 20;
  double l2 = 0.0;
  // Logistic only: weight positives by #neg/#pos.
  bool balance_classes = true;
};

struct TreeNode {
  int feature = -1;  // -1 for a leaf
  double threshold = 0.0;
  int left = -1;     // taken when x[feature] <= threshold
  int right = -1;
  double value = 0.0;
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  double predict(std::span<const double> x) const;
};

class GbdtModel {
 public:
  // Level-wise exact greedy splits on presorted feature columns; the split
  // threshold is the largest value going left. Ties go to the lowest feature
  // index, then the lowest threshold. A round that would raise the training
  // loss has its leaves halved until it does not (or is discarded, which
  // ends training).
  static GbdtModel fit(const Dataset& data, Objective objective, const GbdtParams& params = {});

  // base_score + learning_rate * sum of leaf values.
  double predict(std::span<const double> x) const;
  double predict(const FeatureVector& v) const;
  // Logistic link; for squared error this is the raw prediction.
  double predict_proba(std::span<const double> x) const;
  double predict_proba(const FeatureVector& v) const;

  // Split counts per feature index.
  std::vector<std::size_t> feature_importance() const;
  std::map<std::string, std::size_t> named_importance() const;

  Objective objective() const { return objective_; }
  double base_score() const { return base_score_; }
  double learning_rate() const { return learning_rate_; }
  const std::vector<Tree>& trees() const { return trees_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }
  std::uint64_t schema_version() const { return schema_version_; }
  const GbdtParams& params() const { return params_; }
  // Mean training loss before the first round and after each kept round.
  const std::vector<double>& loss_history() const { return loss_history_; }

  std::string to_json() const;
  static GbdtModel from_json(std::string_view text);

  // Builds a model directly; used by tests and tools.
  static GbdtModel from_parts(Objective objective, double base_score, double learning_rate,
                              std::vector<Tree> trees, std::vector<std::string> feature_names,
                              std::uint64_t schema_version);

 private:
  void check(std::size_t width) const;

  Objective objective_ = Objective::kSquaredError;
  double base_score_ = 0.0;
  double learning_rate_ = 0.1;
  std::vector<Tree> trees_;
  std::vector<std::string> feature_names_;
  std::uint64_t schema_version_ = 0;
  GbdtParams params_;
  std::vector<double> loss_history_;
};

double sigmoid(double z);

// Per-dimension z-scoring with the population standard deviation.
class Scaler {
 public:
  void fit(const std::map<std::string, std::vector<double>, std::less<>>& values);
  // z-score of `value`; 0 for constant or unknown dimensions (the latter
  // logged once).
  double apply(std::string_view dimension, double value) const;
  std::vector<double> apply(std::string_view dimension, std::span<const double> values) const;
  bool has(std::string_view dimension) const { return stats_.count(dimension) > 0; }

  struct Stats {
    double mean = 0.0;
    double stddev = 0.0;
  };
  const std::map<std::string, Stats, std::less<>>& stats() const { return stats_; }

  std::string to_json() const;
  static Scaler from_json(std::string_view text);

 private:
  std::map<std::string, Stats, std::less<>> stats_;
};

}  // namespace cce
