#include "cce/gbdt.hpp"

#include "cce/common.hpp"

#include <fmt/format.h>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>

namespace cce {

using nlohmann::json;

void Dataset::add(std::span<const double> values, double target) {
  if (values.size() != features())
    throw Error(fmt::format("dataset: row has {} values, schema has {}", values.size(), features()));
  x.insert(x.end(), values.begin(), values.end());
  y.push_back(target);
}

std::string_view to_string(Objective o) {
  return o == Objective::kLogistic ? "logistic" : "squared_error";
}

Objective objective_from_string(std::string_view name) {
  if (name == "logistic") return Objective::kLogistic;
  if (name == "squared_error") return Objective::kSquaredError;
  throw Error("unknown objective '" + std::string(name) + "'");
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double Tree::predict(std::span<const double> x) const {
  int n = 0;
  while (nodes[n].feature >= 0)
    n = x[nodes[n].feature] <= nodes[n].threshold ? nodes[n].left : nodes[n].right;
  return nodes[n].value;
}

namespace {

constexpr double kTinyHessian = 1e-12;

double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

struct Loss {
  Objective objective;
  const std::vector<double>& y;
  const std::vector<double>& w;
  double total_weight;

  double operator()(const std::vector<double>& pred) const {
    double s = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double l = objective == Objective::kLogistic ? softplus(pred[i]) - y[i] * pred[i]
                                                         : 0.5 * (y[i] - pred[i]) * (y[i] - pred[i]);
      s += w[i] * l;
    }
    return s / total_weight;
  }
};

struct NodeStats {
  double g = 0.0;
  double h = 0.0;
  std::size_t count = 0;
};

double leaf_value(const NodeStats& s, double l2) {
  const double denom = s.h + l2;
  return denom > kTinyHessian ? -s.g / denom : 0.0;
}

Tree build_tree(const Dataset& data, const std::vector<std::vector<std::uint32_t>>& sorted,
                const std::vector<double>& g, const std::vector<double>& h,
                const GbdtParams& params, std::vector<int>& node_of) {
  const std::size_t n = data.rows();
  const std::size_t nf = data.features();
  const double l2 = params.l2;
  Tree tree;
  tree.nodes.emplace_back();
  std::vector<NodeStats> stats(1);
  for (std::size_t i = 0; i < n; ++i) {
    stats[0].g += g[i];
    stats[0].h += h[i];
  }
  stats[0].count = n;
  std::fill(node_of.begin(), node_of.end(), 0);
  std::vector<int> active = {0};

  auto score = [l2](double gs, double hs) {
    const double d = hs + l2;
    return d > kTinyHessian ? gs * gs / d : 0.0;
  };

  for (std::size_t depth = 0; depth < params.max_depth && !active.empty(); ++depth) {
    struct Best {
      double gain = 0.0;
      int feature = -1;
      double threshold = 0.0;
    };
    struct Scan {
      double gl = 0.0;
      double hl = 0.0;
      std::size_t cnt = 0;
      double last = 0.0;
    };
    std::vector<int> slot(tree.nodes.size(), -1);
    for (std::size_t a = 0; a < active.size(); ++a) slot[active[a]] = static_cast<int>(a);
    std::vector<Best> best(active.size());
    std::vector<Scan> scan(active.size());
    for (std::size_t f = 0; f < nf; ++f) {
      std::fill(scan.begin(), scan.end(), Scan{});
      for (const auto i : sorted[f]) {
        const int s = slot[node_of[i]];
        if (s < 0) continue;
        auto& sc = scan[s];
        const auto& ns = stats[active[s]];
        const double v = data.x[i * nf + f];
        if (sc.cnt > 0 && v > sc.last && sc.cnt >= params.min_samples_leaf &&
            ns.count - sc.cnt >= params.min_samples_leaf) {
          const double gain = score(sc.gl, sc.hl) + score(ns.g - sc.gl, ns.h - sc.hl) -
                              score(ns.g, ns.h);
          if (gain > best[s].gain) best[s] = Best{gain, static_cast<int>(f), sc.last};
        }
        sc.gl += g[i];
        sc.hl += h[i];
        ++sc.cnt;
        sc.last = v;
      }
    }
    std::vector<int> next;
    for (std::size_t a = 0; a < active.size(); ++a) {
      const int node = active[a];
      if (best[a].feature < 0 || !(best[a].gain > 1e-12)) continue;
      const int left = static_cast<int>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes.emplace_back();
      stats.resize(tree.nodes.size());
      slot.resize(tree.nodes.size(), -1);
      tree.nodes[node].feature = best[a].feature;
      tree.nodes[node].threshold = best[a].threshold;
      tree.nodes[node].left = left;
      tree.nodes[node].right = left + 1;
      next.push_back(left);
      next.push_back(left + 1);
    }
    if (next.empty()) break;
    for (std::size_t i = 0; i < n; ++i) {
      auto& nd = tree.nodes[node_of[i]];
      if (nd.feature < 0 || nd.left < 0) continue;
      const int child = data.x[i * nf + nd.feature] <= nd.threshold ? nd.left : nd.right;
      if (tree.nodes[child].feature >= 0) continue;
      node_of[i] = child;
      stats[child].g += g[i];
      stats[child].h += h[i];
      ++stats[child].count;
    }
    active = std::move(next);
  }
  for (std::size_t k = 0; k < tree.nodes.size(); ++k)
    if (tree.nodes[k].feature < 0) tree.nodes[k].value = leaf_value(stats[k], l2);
  return tree;
}

}  // namespace

GbdtModel GbdtModel::fit(const Dataset& data, Objective objective, const GbdtParams& params) {
  const std::size_t n = data.rows();
  if (n == 0) throw Error("gbdt: empty training set");
  if (data.x.size() != n * data.features()) throw Error("gbdt: matrix shape mismatch");
  if (params.max_depth < 1 || params.min_samples_leaf < 1)
    throw ConfigError("gbdt: max_depth and min_samples_leaf must be >= 1");
  GbdtModel m;
  m.objective_ = objective;
  m.learning_rate_ = params.learning_rate;
  m.feature_names_ = data.feature_names;
  m.schema_version_ = data.schema_version;
  m.params_ = params;

  std::vector<double> w(n, 1.0);
  if (objective == Objective::kLogistic) {
    std::size_t pos = 0;
    for (double y : data.y) {
      if (y != 0.0 && y != 1.0) throw Error("gbdt: logistic targets must be 0 or 1");
      pos += y == 1.0;
    }
    const std::size_t neg = n - pos;
    if (params.balance_classes && pos > 0 && neg > 0) {
      const double pw = static_cast<double>(neg) / static_cast<double>(pos);
      for (std::size_t i = 0; i < n; ++i)
        if (data.y[i] == 1.0) w[i] = pw;
    }
    double wp = 0.0, wn = 0.0;
    for (std::size_t i = 0; i < n; ++i) (data.y[i] == 1.0 ? wp : wn) += w[i];
    const double p = std::clamp(wp / (wp + wn), 1e-6, 1.0 - 1e-6);
    m.base_score_ = std::log(p / (1.0 - p));
  } else {
    m.base_score_ = std::accumulate(data.y.begin(), data.y.end(), 0.0) / static_cast<double>(n);
  }
  const double total_weight = std::accumulate(w.begin(), w.end(), 0.0);
  const Loss loss{objective, data.y, w, total_weight};
  std::vector<double> pred(n, m.base_score_);
  double current = loss(pred);
  m.loss_history_.push_back(current);

  const bool constant =
      std::all_of(data.y.begin(), data.y.end(), [&](double y) { return y == data.y[0]; });
  if (constant) {
    if (objective == Objective::kSquaredError) m.base_score_ = data.y[0];
    return m;
  }

  const std::size_t nf = data.features();
  std::vector<std::vector<std::uint32_t>> sorted(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    auto& idx = sorted[f];
    idx.resize(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      return data.x[a * nf + f] < data.x[b * nf + f];
    });
  }

  std::vector<double> g(n), h(n), trial(n);
  std::vector<int> leaf_of(n);
  for (std::size_t round = 0; round < params.n_trees; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      if (objective == Objective::kLogistic) {
        const double p = sigmoid(pred[i]);
        g[i] = w[i] * (p - data.y[i]);
        h[i] = w[i] * p * (1.0 - p);
      } else {
        g[i] = w[i] * (pred[i] - data.y[i]);
        h[i] = w[i];
      }
    }
    Tree tree = build_tree(data, sorted, g, h, params, leaf_of);
    if (tree.nodes.size() == 1 && std::abs(tree.nodes[0].value) < 1e-12) break;
    double scale = 1.0;
    double next = 0.0;
    bool accepted = false;
    for (int attempt = 0; attempt < 40; ++attempt) {
      for (std::size_t i = 0; i < n; ++i)
        trial[i] = pred[i] + params.learning_rate * (scale * tree.nodes[leaf_of[i]].value);
      next = loss(trial);
      if (next <= current) {
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) break;
    for (auto& nd : tree.nodes)
      if (nd.feature < 0) nd.value *= scale;
    pred.swap(trial);
    current = next;
    m.loss_history_.push_back(current);
    m.trees_.push_back(std::move(tree));
  }
  return m;
}

void GbdtModel::check(std::size_t width) const {
  if (width != feature_names_.size())
    throw Error(fmt::format("gbdt: vector has {} features, model expects {}", width,
                            feature_names_.size()));
}

double GbdtModel::predict(std::span<const double> x) const {
  check(x.size());
  double s = 0.0;
  for (const auto& t : trees_) s += t.predict(x);
  return base_score_ + learning_rate_ * s;
}

double GbdtModel::predict(const FeatureVector& v) const {
  if (v.schema_version != schema_version_)
    throw Error(fmt::format("gbdt: feature schema {} does not match model schema {}",
                            hex64(v.schema_version), hex64(schema_version_)));
  return predict(v.values);
}

double GbdtModel::predict_proba(std::span<const double> x) const {
  const double raw = predict(x);
  return objective_ == Objective::kLogistic ? sigmoid(raw) : raw;
}

double GbdtModel::predict_proba(const FeatureVector& v) const {
  const double raw = predict(v);
  return objective_ == Objective::kLogistic ? sigmoid(raw) : raw;
}

std::vector<std::size_t> GbdtModel::feature_importance() const {
  std::vector<std::size_t> counts(feature_names_.size(), 0);
  for (const auto& t : trees_)
    for (const auto& nd : t.nodes)
      if (nd.feature >= 0) ++counts[nd.feature];
  return counts;
}

std::map<std::string, std::size_t> GbdtModel::named_importance() const {
  std::map<std::string, std::size_t> out;
  const auto counts = feature_importance();
  for (std::size_t f = 0; f < counts.size(); ++f) out[feature_names_[f]] = counts[f];
  return out;
}

std::string GbdtModel::to_json() const {
  json trees = json::array();
  for (const auto& t : trees_) {
    json nodes = json::array();
    for (const auto& nd : t.nodes)
      nodes.push_back(json::array({nd.feature, nd.threshold, nd.left, nd.right, nd.value}));
    trees.push_back(nodes);
  }
  json j{{"format", "cce-gbdt"},
         {"version", 1},
         {"objective", to_string(objective_)},
         {"base_score", base_score_},
         {"learning_rate", learning_rate_},
         {"schema_version", hex64(schema_version_)},
         {"feature_names", feature_names_},
         {"params",
          {{"n_trees", params_.n_trees},
           {"max_depth", params_.max_depth},
           {"learning_rate", params_.learning_rate},
           {"min_samples_leaf", params_.min_samples_leaf},
           {"l2", params_.l2},
           {"balance_classes", params_.balance_classes}}},
         {"loss_history", loss_history_},
         {"trees", trees}};
  return j.dump() + "\n";
}

GbdtModel GbdtModel::from_json(std::string_view text) {
  const json j = json::parse(text);
  if (j.value("format", "") != "cce-gbdt") throw Error("gbdt: not a model file");
  GbdtModel m;
  m.objective_ = objective_from_string(j.at("objective").get<std::string>());
  m.base_score_ = j.at("base_score").get<double>();
  m.learning_rate_ = j.at("learning_rate").get<double>();
  m.schema_version_ = std::stoull(j.at("schema_version").get<std::string>(), nullptr, 16);
  m.feature_names_ = j.at("feature_names").get<std::vector<std::string>>();
  const auto& p = j.at("params");
  m.params_.n_trees = p.at("n_trees").get<std::size_t>();
  m.params_.max_depth = p.at("max_depth").get<std::size_t>();
  m.params_.learning_rate = p.at("learning_rate").get<double>();
  m.params_.min_samples_leaf = p.at("min_samples_leaf").get<std::size_t>();
  m.params_.l2 = p.at("l2").get<double>();
  m.params_.balance_classes = p.at("balance_classes").get<bool>();
  m.loss_history_ = j.at("loss_history").get<std::vector<double>>();
  const int width = static_cast<int>(m.feature_names_.size());
  for (const auto& t : j.at("trees")) {
    Tree tree;
    for (const auto& nd : t)
      tree.nodes.push_back(TreeNode{nd.at(0).get<int>(), nd.at(1).get<double>(),
                                    nd.at(2).get<int>(), nd.at(3).get<int>(),
                                    nd.at(4).get<double>()});
    const int count = static_cast<int>(tree.nodes.size());
    for (const auto& nd : tree.nodes) {
      if (nd.feature >= width) throw Error("gbdt: split feature out of range");
      if (nd.feature >= 0 && (nd.left <= 0 || nd.right <= 0 || nd.left >= count ||
                              nd.right >= count))
        throw Error("gbdt: bad child index");
    }
    if (tree.nodes.empty()) throw Error("gbdt: empty tree");
    m.trees_.push_back(std::move(tree));
  }
  return m;
}

GbdtModel GbdtModel::from_parts(Objective objective, double base_score, double learning_rate,
                                std::vector<Tree> trees, std::vector<std::string> feature_names,
                                std::uint64_t schema_version) {
  GbdtModel m;
  m.objective_ = objective;
  m.base_score_ = base_score;
  m.learning_rate_ = learning_rate;
  m.trees_ = std::move(trees);
  m.feature_names_ = std::move(feature_names);
  m.schema_version_ = schema_version;
  return m;
}

void Scaler::fit(const std::map<std::string, std::vector<double>, std::less<>>& values) {
  stats_.clear();
  for (const auto& [dim, xs] : values) {
    if (xs.empty()) continue;
    const double n = static_cast<double>(xs.size());
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    double sd = std::sqrt(var / n);
    if (!(sd > 1e-12 * std::max(1.0, std::abs(mean)))) sd = 0.0;
    stats_[dim] = Stats{mean, sd};
  }
}

double Scaler::apply(std::string_view dimension, double value) const {
  auto it = stats_.find(dimension);
  if (it == stats_.end()) {
    static std::mutex mu;
    static std::set<std::string, std::less<>> warned;
    std::lock_guard lock(mu);
    if (warned.emplace(dimension).second)
      spdlog::warn("scaler: dimension '{}' was not fitted; using z = 0", dimension);
    return 0.0;
  }
  if (it->second.stddev == 0.0) return 0.0;
  return (value - it->second.mean) / it->second.stddev;
}

std::vector<double> Scaler::apply(std::string_view dimension, std::span<const double> values) const {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(apply(dimension, v));
  return out;
}

std::string Scaler::to_json() const {
  json dims = json::object();
  for (const auto& [d, s] : stats_) dims[d] = {{"mean", s.mean}, {"stddev", s.stddev}};
  return json{{"format", "cce-scaler"}, {"dimensions", dims}}.dump(1) + "\n";
}

Scaler Scaler::from_json(std::string_view text) {
  const json j = json::parse(text);
  if (j.value("format", "") != "cce-scaler") throw Error("scaler: not a scaler file");
  Scaler s;
  for (const auto& [d, v] : j.at("dimensions").items())
    s.stats_[d] = Stats{v.at("mean").get<double>(), v.at("stddev").get<double>()};
  return s;
}

}  // namespace cce
