#include "cce/candidate.hpp"

#include "cce/common.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <climits>

namespace cce {

std::vector<Candidate> make_candidates(std::string_view strategy,
                                       std::vector<RankedEntry> entries) {
  std::vector<Candidate> out;
  out.reserve(entries.size());
  int rank = 1;
  for (auto& e : entries) {
    Candidate c;
    c.text = std::move(e.text);
    c.strategies = {std::string(strategy)};
    c.scores = std::move(e.scores);
    c.ranks.emplace(std::string(strategy), rank++);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Candidate> merge_candidates(std::span<const std::vector<Candidate>> lists) {
  std::map<std::string, Candidate, std::less<>> by_text;
  for (const auto& list : lists) {
    for (const auto& c : list) {
      auto [it, inserted] = by_text.try_emplace(c.text, c);
      if (inserted) continue;
      auto& m = it->second;
      for (const auto& s : c.strategies)
        if (std::find(m.strategies.begin(), m.strategies.end(), s) == m.strategies.end())
          m.strategies.push_back(s);
      std::sort(m.strategies.begin(), m.strategies.end());
      for (const auto& [dim, v] : c.scores) {
        auto [sit, fresh] = m.scores.try_emplace(dim, v);
        if (!fresh && sit->second != v)
          throw Error(fmt::format("merge_candidates: conflicting values for '{}' on '{}'", dim,
                                  c.text));
      }
      for (const auto& [s, r] : c.ranks) {
        auto [rit, fresh] = m.ranks.try_emplace(s, r);
        if (!fresh) rit->second = std::min(rit->second, r);
      }
    }
  }
  std::vector<Candidate> out;
  out.reserve(by_text.size());
  for (auto& [_, c] : by_text) out.push_back(std::move(c));
  auto best = [](const Candidate& c) {
    std::pair<int, std::string_view> b{INT_MAX, {}};
    for (const auto& [s, r] : c.ranks)
      if (r < b.first) b = {r, s};
    return b;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
    const auto ba = best(a), bb = best(b);
    if (ba != bb) return ba < bb;
    return a.text < b.text;
  });
  return out;
}

}  // namespace cce
