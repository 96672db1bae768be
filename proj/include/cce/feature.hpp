#pragma once

#include "cce/candidate.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

// Marks an absent value. Real features never take this value.
inline constexpr double kMissing = -1.0;

enum class FeatureLevel { kSet, kCandidate };

std::string_view to_string(FeatureLevel level);

struct FeatureSchema {
  FeatureLevel level;
  std::vector<std::string> names;
  std::uint64_t version;  // FNV-1a over the level and ordered names

  static const FeatureSchema& set_level();
  static const FeatureSchema& candidate_level();
  std::size_t size() const { return names.size(); }
  std::string to_json() const;
};

std::uint64_t schema_version(FeatureLevel level, std::span<const std::string> names);

struct FeatureVector {
  std::uint64_t schema_version = 0;
  std::vector<double> values;
};

inline constexpr std::size_t kContextFeatureCount = 7;
using ContextFeatures = std::array<double, kContextFeatureCount>;

// line_number, tokens_in_current_line, prefix_length, prefix_is_capitalized,
// last_token_hash, last_symbol_hash, chars_since_line_start. Only the
// current line is lexed. The hashes are FNV-1a modulo 2^20 of the last
// token (or symbol) before the identifier being typed.
ContextFeatures extract_context(std::string_view prefix);

// Strategies with feature slots, in slot order.
inline constexpr std::array<std::string_view, 3> kFeatureStrategies = {
    strategy_ids::kGlobal, strategy_ids::kLocal, strategy_ids::kLm};
std::string_view primary_dimension_of(std::string_view strategy);

FeatureVector extract_set(const ContextFeatures& context, std::span<const Candidate> candidates);
FeatureVector extract_candidate(const ContextFeatures& context, const Candidate& candidate);

std::uint64_t feature_hash(std::string_view text);

}  // namespace cce
