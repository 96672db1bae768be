#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

inline constexpr std::size_t kMaxCandidatesPerStrategy = 5;

namespace strategy_ids {
inline constexpr std::string_view kGlobal = "global";
inline constexpr std::string_view kLocal = "local";
inline constexpr std::string_view kLm = "lm";
}  // namespace strategy_ids

namespace dims {
inline constexpr std::string_view kGlobalCount = "global_count";
inline constexpr std::string_view kGlobalFileCount = "global_file_count";
inline constexpr std::string_view kGlobalProjectCount = "global_project_count";
inline constexpr std::string_view kLocalCount = "local_count";
inline constexpr std::string_view kLmLogprob = "lm_logprob";
}  // namespace dims

// One completion suggestion. `text` is what would be inserted at the cursor
// (already-typed characters excluded).
struct Candidate {
  std::string text;
  std::vector<std::string> strategies;              // provenance, sorted
  std::map<std::string, double, std::less<>> scores;  // dimension -> value
  std::map<std::string, int, std::less<>> ranks;      // strategy -> 1-based rank

  std::size_t length() const { return text.size(); }
  bool from(std::string_view strategy) const { return ranks.count(strategy) > 0; }

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Builds a single-strategy candidate list from already ordered entries,
// filling provenance and ranks.
struct RankedEntry {
  std::string text;
  std::map<std::string, double, std::less<>> scores;
};
std::vector<Candidate> make_candidates(std::string_view strategy,
                                       std::vector<RankedEntry> entries);

// Unifies candidates with identical text: provenance, ranks and score
// dimensions are unioned. The output order is independent of the order of
// the input lists: best rank first, then strategy id, then text. Throws if
// two inputs disagree on the value of one dimension.
std::vector<Candidate> merge_candidates(std::span<const std::vector<Candidate>> lists);

// A strategy's per-session state (local counts, line caches, a child
// process). Sessions follow one growing file prefix and are single-owner.
class StrategySession {
 public:
  virtual ~StrategySession() = default;
  virtual std::string_view id() const = 0;
  // `prefix` is the whole text before the cursor.
  virtual std::vector<Candidate> query(std::string_view prefix, std::size_t k) = 0;
};

// An immutable, shareable strategy model.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string_view id() const = 0;
  virtual std::vector<std::string> dimensions() const = 0;
  // The dimension the strategy sorts by; used by normalized ranking.
  virtual std::string primary_dimension() const = 0;
  virtual std::unique_ptr<StrategySession> new_session() const = 0;
};

}  // namespace cce
