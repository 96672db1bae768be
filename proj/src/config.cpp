#include "cce/config.hpp"

#include "cce/common.hpp"

#include <fmt/format.h>

#include <charconv>
#include <sstream>

namespace cce {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, sep)) {
    auto t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& v) {
  T out{};
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end)
    throw ConfigError(fmt::format("config: '{}' expects a number, got '{}'", key, v));
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "off" || v == "0" || v == "no") return false;
  throw ConfigError(fmt::format("config: '{}' expects true/false, got '{}'", key, v));
}

void set_gbdt(GbdtParams& p, const std::string& field, const std::string& key,
              const std::string& v) {
  if (field == "n_trees")
    p.n_trees = parse_number<std::size_t>(key, v);
  else if (field == "max_depth")
    p.max_depth = parse_number<std::size_t>(key, v);
  else if (field == "learning_rate")
    p.learning_rate = parse_number<double>(key, v);
  else if (field == "min_samples_leaf")
    p.min_samples_leaf = parse_number<std::size_t>(key, v);
  else if (field == "l2")
    p.l2 = parse_number<double>(key, v);
  else
    throw ConfigError("config: unknown key '" + key + "'");
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& config_keys() {
  static const std::vector<std::pair<std::string, std::string>> keys = {
      {"corpus_dir", "source tree to ingest (ingest)"},
      {"build_dir", "root of every artifact (all commands)"},
      {"model_dir", "trained models, default <build_dir>/models"},
      {"report_dir", "evaluation reports, default <build_dir>/reports"},
      {"seed", "split seed (ingest)"},
      {"workers", "worker threads (simulate, eval)"},
      {"split_train", "train fraction (ingest)"},
      {"split_simulation", "simulation fraction (ingest)"},
      {"split_test", "test fraction (ingest)"},
      {"method_filtering", "off|train|all: drop filtered methods (ingest)"},
      {"extensions", "comma-separated file extensions (ingest)"},
      {"string_len_threshold", "literal length threshold (ingest)"},
      {"string_freq_threshold", "literal frequency threshold (ingest)"},
      {"global_min_length", "rare sub-token length bound (train-strategies)"},
      {"global_min_projects", "rare sub-token project bound (train-strategies)"},
      {"global_filter", "and|or: how the two rare bounds combine (train-strategies)"},
      {"bpe_vocab_size", "BPE vocabulary size (train-strategies)"},
      {"lm_order", "n-gram order (train-strategies)"},
      {"lm_backoff", "stupid backoff factor (train-strategies)"},
      {"beam_k", "beam size (simulate, complete)"},
      {"beam_t", "aggregate logprob threshold (simulate, complete)"},
      {"beam_max_steps", "generated tokens per beam (simulate, complete)"},
      {"time_budget_ms", "LM wall-clock budget, 0 = unlimited (complete)"},
      {"lm_cache", "reuse beams within an identifier (simulate, complete)"},
      {"context_window", "characters of context the LM sees (simulate, complete)"},
      {"strategies", "comma-separated subset of global,local,lm (simulate, complete)"},
      {"external.<id>", "command line of an external strategy (simulate, complete)"},
      {"external.<id>.dimensions", "comma-separated score dimensions it returns"},
      {"external.<id>.primary", "dimension used by normalized ranking"},
      {"external.<id>.timeout_ms", "per-request timeout"},
      {"acceptance.<param>", "n_trees|max_depth|learning_rate|min_samples_leaf|l2 (fit)"},
      {"ranking.<param>", "same parameters for the ranking regressor (fit)"},
      {"acceptance_include_empty", "empty lists become negative samples (fit)"},
      {"theta", "acceptance threshold (eval, complete)"},
      {"mode", "fusion|normalized|unranked (complete)"},
      {"gate", "enable the acceptance gate (complete)"},
  };
  return keys;
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  bool model_dir_set = false, report_dir_set = false;
  std::map<std::string, ExternalSpec> externals;
  auto path_of = [&](const std::string& v) {
    std::filesystem::path p(v);
    return (p.is_absolute() ? p : base_dir / p).lexically_normal();
  };
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(fmt::format("config line {}: expected 'key = value'", line_no));
    const auto key = trim(line.substr(0, eq));
    const auto v = trim(line.substr(eq + 1));
    auto num = [&]<typename T>(T& field) { field = parse_number<T>(key, v); };
    if (key == "corpus_dir") cfg.corpus_dir = path_of(v);
    else if (key == "build_dir") cfg.build_dir = path_of(v);
    else if (key == "model_dir") { cfg.model_dir = path_of(v); model_dir_set = true; }
    else if (key == "report_dir") { cfg.report_dir = path_of(v); report_dir_set = true; }
    else if (key == "seed") { num(cfg.seed); cfg.ingest.seed = cfg.seed; }
    else if (key == "workers") num(cfg.workers);
    else if (key == "split_train") num(cfg.ingest.ratios.train);
    else if (key == "split_simulation") num(cfg.ingest.ratios.simulation);
    else if (key == "split_test") num(cfg.ingest.ratios.test);
    else if (key == "method_filtering") {
      try {
        cfg.ingest.method_filtering = method_filtering_from_string(v);
      } catch (const Error& e) {
        throw ConfigError(e.what());
      }
    }
    else if (key == "extensions") cfg.ingest.extensions = split_list(v, ',');
    else if (key == "string_len_threshold") num(cfg.ingest.preprocess.string_len_threshold);
    else if (key == "string_freq_threshold") num(cfg.ingest.preprocess.string_freq_threshold);
    else if (key == "global_min_length") num(cfg.global.min_length);
    else if (key == "global_min_projects") num(cfg.global.min_projects);
    else if (key == "global_filter") {
      if (v == "and") cfg.global.combine = RareFilter::kAnd;
      else if (v == "or") cfg.global.combine = RareFilter::kOr;
      else throw ConfigError("config: global_filter must be 'and' or 'or'");
    }
    else if (key == "bpe_vocab_size") num(cfg.bpe_vocab_size);
    else if (key == "lm_order") num(cfg.lm_order);
    else if (key == "lm_backoff") num(cfg.lm_backoff);
    else if (key == "beam_k") num(cfg.beam.k);
    else if (key == "beam_t") num(cfg.beam.t);
    else if (key == "beam_max_steps") num(cfg.beam.max_steps);
    else if (key == "time_budget_ms") num(cfg.beam.time_budget_ms);
    else if (key == "lm_cache") cfg.lm_cache = parse_bool(key, v);
    else if (key == "context_window") num(cfg.context_window);
    else if (key == "strategies") cfg.strategies = split_list(v, ',');
    else if (key == "acceptance_include_empty") cfg.acceptance.include_empty = parse_bool(key, v);
    else if (key == "theta") num(cfg.pipeline.theta);
    else if (key == "mode") cfg.pipeline.mode = rank_mode_from_string(v);
    else if (key == "gate") cfg.pipeline.gate = parse_bool(key, v);
    else if (key.starts_with("acceptance.")) set_gbdt(cfg.acceptance_params, key.substr(11), key, v);
    else if (key.starts_with("ranking.")) set_gbdt(cfg.ranking_params, key.substr(8), key, v);
    else if (key.starts_with("external.")) {
      const auto rest = key.substr(9);
      const auto dot = rest.find('.');
      const auto id = rest.substr(0, dot);
      if (id.empty()) throw ConfigError("config: external strategy without an id");
      auto& spec = externals[id];
      spec.id = id;
      if (dot == std::string::npos) spec.argv = split_list(v, ' ');
      else if (rest.substr(dot + 1) == "dimensions") spec.dimensions = split_list(v, ',');
      else if (rest.substr(dot + 1) == "primary") spec.primary = v;
      else if (rest.substr(dot + 1) == "timeout_ms") num(spec.timeout_ms);
      else throw ConfigError("config: unknown key '" + key + "'");
    }
    else throw ConfigError(fmt::format("config line {}: unknown key '{}'", line_no, key));
  }
  for (auto& [id, spec] : externals) {
    if (spec.argv.empty()) throw ConfigError("config: external." + id + " has no command");
    if (spec.primary.empty() && !spec.dimensions.empty()) spec.primary = spec.dimensions.front();
    cfg.externals.push_back(spec);
  }
  for (const auto& s : cfg.strategies)
    if (s != "global" && s != "local" && s != "lm")
      throw ConfigError("config: unknown strategy '" + s + "'");
  const auto& r = cfg.ingest.ratios;
  if (r.train < 0 || r.simulation < 0 || r.test < 0 ||
      std::abs(r.train + r.simulation + r.test - 1.0) > 1e-9)
    throw ConfigError("config: split fractions must be non-negative and sum to 1");
  if (cfg.workers == 0) throw ConfigError("config: workers must be >= 1");
  if (cfg.beam.k == 0 || cfg.beam.max_steps == 0)
    throw ConfigError("config: beam_k and beam_max_steps must be >= 1");
  if (cfg.pipeline.theta < 0.0 || cfg.pipeline.theta > 1.0)
    throw ConfigError("config: theta must lie in [0,1]");
  if (cfg.lm_order == 0) throw ConfigError("config: lm_order must be >= 1");
  if (!(cfg.lm_backoff > 0.0 && cfg.lm_backoff < 1.0))
    throw ConfigError("config: lm_backoff must lie in (0,1)");
  if (!model_dir_set) cfg.model_dir = cfg.build_dir / "models";
  if (!report_dir_set) cfg.report_dir = cfg.build_dir / "reports";
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ConfigError("config file not found: " + path.string());
  return parse_config(read_file(path), std::filesystem::absolute(path).parent_path());
}

}  // namespace cce
