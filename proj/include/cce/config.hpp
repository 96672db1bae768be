#pragma once

#include "cce/beam_search.hpp"
#include "cce/corpus.hpp"
#include "cce/datasets.hpp"
#include "cce/ensemble.hpp"
#include "cce/gbdt.hpp"
#include "cce/global_frequency.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

struct ExternalSpec {
  std::string id;
  std::vector<std::string> argv;
  std::vector<std::string> dimensions;
  std::string primary;
  std::int64_t timeout_ms = 2000;
};

struct RunConfig {
  std::filesystem::path corpus_dir;
  std::filesystem::path build_dir = "build/run";
  std::filesystem::path model_dir;   // default <build_dir>/models
  std::filesystem::path report_dir;  // default <build_dir>/reports
  std::uint64_t seed = 7;
  std::size_t workers = 1;

  IngestOptions ingest;
  GlobalBuildOptions global;
  std::size_t bpe_vocab_size = kDefaultBpeVocabSize;
  std::size_t lm_order = 5;
  double lm_backoff = 0.4;
  BeamConfig beam;
  bool lm_cache = true;
  std::size_t context_window = 2048;
  std::vector<std::string> strategies = {"global", "local", "lm"};
  std::vector<ExternalSpec> externals;

  GbdtParams acceptance_params;
  GbdtParams ranking_params;
  AcceptanceOptions acceptance;
  PipelineConfig pipeline;

  std::filesystem::path corpus_out() const { return build_dir / "corpus"; }
  std::filesystem::path samples_dir(Split split) const {
    return build_dir / "samples" / std::string(to_string(split));
  }
};

// Parses "key = value" lines; '#' starts a comment. Relative paths are
// resolved against `base_dir`. Unknown keys and bad values throw
// ConfigError.
RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir);
RunConfig load_config(const std::filesystem::path& path);

// Every key with its meaning, for --help.
const std::vector<std::pair<std::string, std::string>>& config_keys();

}  // namespace cce
