#pragma once

#include "cce/bpe.hpp"
#include "cce/config.hpp"
#include "cce/external_strategy.hpp"
#include "cce/global_frequency.hpp"
#include "cce/lm_strategy.hpp"
#include "cce/local_frequency.hpp"
#include "cce/ngram_lm.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cce {

// Trained strategy artifacts with stable addresses.
struct LoadedStrategies {
  BpeModel bpe;
  NgramModel lm;
  std::optional<GlobalFrequencyStrategy> global;
  LocalFrequencyStrategy local;
  std::unique_ptr<LmStrategy> lm_strategy;
  std::vector<std::unique_ptr<ExternalStrategy>> externals;
  std::vector<const Strategy*> enabled;
};

// Loads what `cfg.strategies` and `cfg.externals` ask for. `deterministic`
// forces an unlimited LM time budget.
std::unique_ptr<LoadedStrategies> load_strategies(const RunConfig& cfg, bool deterministic);

// Each command returns its one-line JSON summary.
std::string cmd_ingest(const RunConfig& cfg);
std::string cmd_train_strategies(const RunConfig& cfg);
std::string cmd_simulate(const RunConfig& cfg);
std::string cmd_fit(const RunConfig& cfg);
std::string cmd_eval(const RunConfig& cfg);
std::string cmd_complete(const RunConfig& cfg, const std::filesystem::path& file,
                         std::size_t offset);

// Digest of every file under a directory (relative paths and contents).
std::string directory_digest(const std::filesystem::path& dir);

// Exit code for an exception escaping a command: 2 config, 3 missing
// artifact, 4 anything else.
int exit_code_for(const std::exception& e);

}  // namespace cce
