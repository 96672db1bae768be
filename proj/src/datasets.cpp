#include "cce/datasets.hpp"

namespace cce {

Dataset empty_dataset(const FeatureSchema& schema) {
  Dataset d;
  d.feature_names = schema.names;
  d.schema_version = schema.version;
  return d;
}

Dataset make_acceptance_dataset(std::span<const StoredFile> store,
                                const AcceptanceOptions& options) {
  Dataset d = empty_dataset(FeatureSchema::set_level());
  for (const auto& f : store) {
    const std::string_view text = f.text;
    for (const auto& s : f.samples.samples) {
      if (!s.critical) continue;
      if (s.candidates.empty() && !options.include_empty) continue;
      const auto ctx = extract_context(text.substr(0, s.pos));
      d.add(extract_set(ctx, s.candidates).values, s.any_hit() ? 1.0 : 0.0);
    }
  }
  return d;
}

Dataset make_ranking_dataset(std::span<const StoredFile> store) {
  Dataset d = empty_dataset(FeatureSchema::candidate_level());
  for (const auto& f : store) {
    const std::string_view text = f.text;
    for (const auto& s : f.samples.samples) {
      if (!s.critical || !s.any_hit()) continue;
      const auto ctx = extract_context(text.substr(0, s.pos));
      for (std::size_t i = 0; i < s.candidates.size(); ++i) {
        const auto& c = s.candidates[i];
        d.add(extract_candidate(ctx, c).values, s.hits[i] ? static_cast<double>(c.length()) : 0.0);
      }
    }
  }
  return d;
}

Scaler fit_scaler(std::span<const StoredFile> store) {
  std::map<std::string, std::vector<double>, std::less<>> values;
  for (const auto& f : store)
    for (const auto& s : f.samples.samples) {
      if (!s.critical) continue;
      for (const auto& c : s.candidates)
        for (const auto& [d, v] : c.scores) values[d].push_back(v);
    }
  Scaler sc;
  sc.fit(values);
  return sc;
}

}  // namespace cce
