#pragma once

#include "cce/candidate.hpp"
#include "cce/corpus.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

struct SimulationSample {
  std::size_t pos = 0;
  bool critical = true;
  std::vector<Candidate> candidates;  // merged
  std::vector<std::uint8_t> hits;     // aligned with candidates

  bool any_hit() const;
  // Index of the longest hit (best rank order on equal length), or -1.
  int longest_hit() const;
  friend bool operator==(const SimulationSample&, const SimulationSample&) = default;
};

struct FileSamples {
  std::string file;
  std::vector<SimulationSample> samples;
  bool failed = false;
  std::string error;
};

struct SimulationRunConfig {
  std::size_t cap = kMaxCandidatesPerStrategy;
  std::size_t workers = 1;
};

bool is_hit(const Candidate& c, std::string_view ground_truth_suffix);
std::vector<std::uint8_t> label_candidates(std::span<const Candidate> candidates,
                                           std::string_view ground_truth_suffix);

// Left-to-right sweep: a critical sample with hits accepts its longest hit
// of length L and makes the next L positions non-critical.
void mark_critical(std::vector<SimulationSample>& samples);

// One session per strategy, following a single file.
class SessionSet {
 public:
  explicit SessionSet(std::span<const Strategy* const> strategies);
  // Queries every session (at most `cap` each) and merges. A failing
  // strategy contributes nothing and is logged.
  std::vector<Candidate> gather(std::string_view prefix, std::size_t cap);

 private:
  std::vector<std::unique_ptr<StrategySession>> sessions_;
};

FileSamples simulate_file(const CodeFile& file, std::span<const Strategy* const> strategies,
                          const SimulationRunConfig& cfg);

// Runs `task(i)` for i in [0, n) on `workers` threads.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& task);

// File-level pool. Results are sorted by file path whatever the worker
// count. A file that throws is retried once, then marked failed.
std::vector<FileSamples> run_parallel(std::span<const CodeFile* const> files,
                                      std::span<const Strategy* const> strategies,
                                      const SimulationRunConfig& cfg);

// Sample store layout under `dir`:
//   index.json               files, shard names, sample counts, failures
//   <shard>.jsonl            one sample per line
//   truth/<shard>.txt        the file text (ground truth, kept apart)
struct StoredFile {
  FileSamples samples;
  std::string text;
};

std::string shard_name(std::string_view file_path);
std::string sample_to_json(std::string_view file, const SimulationSample& s);
SimulationSample sample_from_json(std::string_view line);
void write_sample_store(const std::filesystem::path& dir, std::span<const FileSamples> results,
                        std::span<const CodeFile* const> files);
std::vector<StoredFile> load_sample_store(const std::filesystem::path& dir);

struct CriticalStats {
  std::size_t positions = 0;
  std::size_t critical = 0;
  double fraction() const { return positions ? double(critical) / double(positions) : 0.0; }
};
CriticalStats critical_stats(std::span<const FileSamples> results);

}  // namespace cce
