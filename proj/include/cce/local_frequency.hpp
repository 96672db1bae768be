#pragma once

#include "cce/candidate.hpp"
#include "cce/global_frequency.hpp"
#include "cce/lexer.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cce {

// Token counts of the code before the cursor in the current file.
class LocalFrequencyState {
 public:
  void update(const Token& token);
  void update(std::string_view word);

  // Words starting with `prefix` by descending count, then text.
  std::vector<WordMatch> lookup(std::string_view prefix, std::size_t k) const;

  // Candidates for the identifier prefix (the prefix itself excluded).
  std::vector<Candidate> query(std::string_view prefix, std::size_t k) const;

  // Feeds every complete token of `prefix` not seen yet. A token touching
  // the end of `prefix` may still grow and is held back.
  void advance(std::string_view prefix);

  void clear();
  std::size_t vocabulary() const { return counts_.size(); }

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::size_t committed_ = 0;
};

class LocalFrequencyStrategy final : public Strategy {
 public:
  std::string_view id() const override { return strategy_ids::kLocal; }
  std::vector<std::string> dimensions() const override {
    return {std::string(dims::kLocalCount)};
  }
  std::string primary_dimension() const override { return std::string(dims::kLocalCount); }
  std::unique_ptr<StrategySession> new_session() const override;
};

}  // namespace cce
