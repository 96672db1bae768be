#include "cce/feature.hpp"

#include "cce/common.hpp"
#include "cce/lexer.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>

namespace cce {
namespace {

const std::vector<std::string>& context_names() {
  static const std::vector<std::string> names = {
      "line_number",     "tokens_in_current_line", "prefix_length", "prefix_is_capitalized",
      "last_token_hash", "last_symbol_hash",       "chars_since_line_start"};
  return names;
}

const std::array<std::string_view, 5> kScoreDims = {dims::kGlobalCount, dims::kGlobalFileCount,
                                                    dims::kGlobalProjectCount, dims::kLocalCount,
                                                    dims::kLmLogprob};

// Keeps real values off the sentinel.
double real(double v) { return v == kMissing ? std::nextafter(kMissing, 0.0) : v; }

FeatureSchema make_schema(FeatureLevel level) {
  std::vector<std::string> names = context_names();
  if (level == FeatureLevel::kSet) {
    for (auto s : kFeatureStrategies)
      for (auto f : {"candidate_count", "top1_score", "top2_score", "top1_length", "top2_length"})
        names.push_back(std::string(s) + "_" + f);
    names.push_back("max_cross_strategy_occurrence");
    names.push_back("total_candidate_count");
  } else {
    names.push_back("candidate_length");
    for (auto d : kScoreDims) names.emplace_back(d);
    names.push_back("provenance_count");
    for (auto s : kFeatureStrategies) names.push_back(std::string(s) + "_rank");
  }
  const auto version = schema_version(level, names);
  return FeatureSchema{level, std::move(names), version};
}

}  // namespace

std::string_view to_string(FeatureLevel level) {
  return level == FeatureLevel::kSet ? "set" : "candidate";
}

std::uint64_t schema_version(FeatureLevel level, std::span<const std::string> names) {
  auto h = fnv1a64(to_string(level));
  for (const auto& n : names) h = fnv1a64(n, fnv1a64("\x1f", h));
  return h;
}

const FeatureSchema& FeatureSchema::set_level() {
  static const FeatureSchema s = make_schema(FeatureLevel::kSet);
  return s;
}

const FeatureSchema& FeatureSchema::candidate_level() {
  static const FeatureSchema s = make_schema(FeatureLevel::kCandidate);
  return s;
}

std::string FeatureSchema::to_json() const {
  return nlohmann::json{{"level", to_string(level)}, {"version", hex64(version)}, {"names", names}}
      .dump(1);
}

std::uint64_t feature_hash(std::string_view text) { return fnv1a64(text) % (1u << 20); }

std::string_view primary_dimension_of(std::string_view strategy) {
  if (strategy == strategy_ids::kGlobal) return dims::kGlobalCount;
  if (strategy == strategy_ids::kLocal) return dims::kLocalCount;
  if (strategy == strategy_ids::kLm) return dims::kLmLogprob;
  return {};
}

ContextFeatures extract_context(std::string_view prefix) {
  ContextFeatures f{};
  const auto nl = prefix.rfind('\n');
  const std::size_t line_start = nl == std::string_view::npos ? 0 : nl + 1;
  const auto line = prefix.substr(line_start);
  const auto ident = trailing_identifier_length(prefix);
  const auto before = line.substr(0, line.size() - std::min(ident, line.size()));

  f[0] = static_cast<double>(std::count(prefix.begin(), prefix.end(), '\n'));
  std::size_t tokens = 0;
  for (const auto& t : tokenize(line))
    if (t.kind != TokenKind::kWhitespace) ++tokens;
  f[1] = static_cast<double>(tokens);
  f[2] = static_cast<double>(ident);
  f[3] = ident > 0 && std::isupper(static_cast<unsigned char>(prefix[prefix.size() - ident])) ? 1 : 0;
  f[4] = kMissing;
  f[5] = kMissing;
  const auto toks = tokenize(before);
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    if (it->kind == TokenKind::kWhitespace || it->kind == TokenKind::kNewline) continue;
    if (f[4] == kMissing) f[4] = static_cast<double>(feature_hash(it->text));
    if (it->kind == TokenKind::kSymbol) {
      f[5] = static_cast<double>(feature_hash(it->text));
      break;
    }
  }
  f[6] = static_cast<double>(line.size());
  return f;
}

FeatureVector extract_set(const ContextFeatures& context, std::span<const Candidate> candidates) {
  const auto& schema = FeatureSchema::set_level();
  FeatureVector v{schema.version, {context.begin(), context.end()}};
  v.values.reserve(schema.size());
  for (auto s : kFeatureStrategies) {
    const auto dim = primary_dimension_of(s);
    std::vector<const Candidate*> own;
    for (const auto& c : candidates)
      if (c.from(s)) own.push_back(&c);
    auto score = [&](const Candidate* c) {
      auto it = c->scores.find(dim);
      return it == c->scores.end() ? kMissing : real(it->second);
    };
    std::stable_sort(own.begin(), own.end(), [&](const Candidate* a, const Candidate* b) {
      const double sa = score(a), sb = score(b);
      if (sa != sb) return sa > sb;
      return a->ranks.find(s)->second < b->ranks.find(s)->second;
    });
    v.values.push_back(static_cast<double>(own.size()));
    v.values.push_back(own.size() > 0 ? score(own[0]) : kMissing);
    v.values.push_back(own.size() > 1 ? score(own[1]) : kMissing);
    v.values.push_back(own.size() > 0 ? static_cast<double>(own[0]->length()) : kMissing);
    v.values.push_back(own.size() > 1 ? static_cast<double>(own[1]->length()) : kMissing);
  }
  std::size_t cross = 0;
  for (const auto& c : candidates) cross = std::max(cross, c.strategies.size());
  v.values.push_back(static_cast<double>(cross));
  v.values.push_back(static_cast<double>(candidates.size()));
  return v;
}

FeatureVector extract_candidate(const ContextFeatures& context, const Candidate& candidate) {
  const auto& schema = FeatureSchema::candidate_level();
  FeatureVector v{schema.version, {context.begin(), context.end()}};
  v.values.reserve(schema.size());
  v.values.push_back(static_cast<double>(candidate.length()));
  for (auto d : kScoreDims) {
    auto it = candidate.scores.find(d);
    v.values.push_back(it == candidate.scores.end() ? kMissing : real(it->second));
  }
  v.values.push_back(static_cast<double>(candidate.strategies.size()));
  for (auto s : kFeatureStrategies) {
    auto it = candidate.ranks.find(s);
    v.values.push_back(it == candidate.ranks.end() ? kMissing : static_cast<double>(it->second));
  }
  return v;
}

}  // namespace cce
