#include "cce/beam_search.hpp"
#include "cce/common.hpp"
#include "chain_model.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <thread>

using namespace cce;
using testing::ChainModel;
using testing::TableModel;

namespace {

std::size_t total(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

bool has_comment_start(char before, std::string_view text) {
  std::string s(1, before);
  s += text;
  return s.find("//") != std::string::npos || s.find("/*") != std::string::npos ||
         s.find('#') != std::string::npos;
}

bool windows_distinct(std::span<const TokenId> tokens, std::size_t m) {
  std::set<std::vector<TokenId>> seen;
  for (std::size_t i = 0; i + m <= tokens.size(); ++i)
    if (!seen.emplace(tokens.begin() + i, tokens.begin() + i + m).second) return false;
  return true;
}

}  // namespace

TEST_CASE("dynamic batching evaluates 5 + 2*9 = 23 beams instead of 50") {
  ChainModel m;
  BeamConfig cfg;
  cfg.k = 5;
  cfg.t = -3.0;
  cfg.max_steps = 12;
  BeamStats stats;
  const std::vector<TokenId> ctx = {ChainModel::C};
  const auto beams = beam_search(m.model, ctx, cfg, &stats);

  CHECK(stats.batch_sizes == std::vector<std::size_t>{5, 2, 2, 2, 2, 2, 2, 2, 2, 2});
  CHECK(stats.evaluations == 5 * 1 + 2 * 9);
  CHECK(stats.evaluations == total(stats.batch_sizes));
  CHECK(m.model.calls == stats.prefill + stats.evaluations);
  const std::size_t naive = cfg.k * stats.batch_sizes.size();
  CHECK(naive == 50);
  CHECK(stats.evaluations < naive);

  REQUIRE(beams.size() == 2);
  for (const auto& b : beams) {
    CHECK(b.reason == StopReason::kEndOfLine);
    CHECK(b.tokens.size() == 11);
    CHECK(b.logprob == doctest::Approx(-0.1 - 0.01 * 10).epsilon(1e-12));
    CHECK(b.text.back() == '\n');
  }
  CHECK(beams[0].text == "a0x1x2x3x4x5x6x7x8x9\n");
  CHECK(beams[1].text == "a1x1x2x3x4x5x6x7x8x9\n");
}

TEST_CASE("everything below the threshold after step 1 yields no results") {
  TableModel model({"C", "a", "b"});
  model.set(0, {{1, -4.0}, {2, -5.0}});
  BeamConfig cfg;
  BeamStats stats;
  const std::vector<TokenId> ctx = {0};
  CHECK(beam_search(model, ctx, cfg, &stats).empty());
  CHECK(stats.evaluations == 0);
  CHECK(stats.dropped.size() == 2);
  for (const auto& b : stats.dropped) CHECK(b.reason == StopReason::kThreshold);
}

TEST_CASE("a model that ends the line first yields length-1 candidates") {
  TableModel model({"C", "\n", " \n", ";\n"});
  model.set(0, {{1, -0.5}, {2, -1.0}, {3, -1.5}});
  const std::vector<TokenId> ctx = {0};
  const auto beams = beam_search(model, ctx, BeamConfig{});
  REQUIRE(beams.size() == 3);
  for (const auto& b : beams) {
    CHECK(b.tokens.size() == 1);
    CHECK(b.reason == StopReason::kEndOfLine);
  }
}

TEST_CASE("a model with no continuations gives an empty result") {
  TableModel model({"C"});
  const std::vector<TokenId> ctx = {0};
  CHECK(beam_search(model, ctx, BeamConfig{}).empty());
}

TEST_CASE("comment starts are dropped, including one formed with the context") {
  TableModel model({"C", "/", "#", "x", "/*", "\n"});
  model.set(0, {{1, -0.1}, {2, -0.2}, {3, -0.3}, {4, -0.4}});
  model.set(3, {{5, -0.1}});
  BeamStats stats;
  const std::vector<TokenId> ctx = {0};
  auto beams = beam_search(model, ctx, BeamConfig{}, &stats, "a = b /");
  REQUIRE(beams.size() == 1);
  CHECK(beams[0].text == "x\n");
  std::multiset<std::string> dropped;
  for (const auto& b : stats.dropped) {
    CHECK(b.reason == StopReason::kComment);
    dropped.insert(b.text);
  }
  CHECK(dropped == std::multiset<std::string>{"/", "#", "/*"});

  BeamStats plain;
  beam_search(model, ctx, BeamConfig{}, &plain, "a = b ");
  CHECK(plain.dropped.size() == 2);
}

TEST_CASE("a closed loop is dropped when a 4-token window repeats") {
  TableModel model({"C", "a", "b"});
  model.set(0, {{1, -0.01}});
  model.set(1, {{2, -0.01}});
  model.set(2, {{1, -0.01}});
  BeamConfig cfg;
  cfg.max_steps = 50;
  BeamStats stats;
  const std::vector<TokenId> ctx = {0};
  CHECK(beam_search(model, ctx, cfg, &stats).empty());
  REQUIRE(stats.dropped.size() == 1);
  CHECK(stats.dropped[0].reason == StopReason::kLoop);
  CHECK(stats.dropped[0].text == "ababab");
}

TEST_CASE("max_steps ends a sequence and returns it") {
  TableModel model({"C", "a", "b", "c", "d", "e", "f"});
  model.set(0, {{1, -0.01}});
  for (TokenId i = 1; i < 6; ++i) model.set(i, {{i + 1, -0.01}});
  BeamConfig cfg;
  cfg.max_steps = 4;
  const std::vector<TokenId> ctx = {0};
  const auto beams = beam_search(model, ctx, cfg);
  REQUIRE(beams.size() == 1);
  CHECK(beams[0].text == "abcd");
  CHECK(beams[0].reason == StopReason::kMaxSteps);
}

TEST_CASE("invalid configurations are rejected") {
  TableModel model({"C"});
  const std::vector<TokenId> ctx = {0};
  BeamConfig cfg;
  cfg.k = 0;
  CHECK_THROWS_AS(beam_search(model, ctx, cfg), ConfigError);
  cfg.k = 5;
  cfg.max_steps = 0;
  CHECK_THROWS_AS(beam_search(model, ctx, cfg), ConfigError);
}

namespace {

class SlowModel final : public TokenModel {
 public:
  explicit SlowModel(const TokenModel& inner) : inner_(inner) {}
  std::vector<ScoredToken> top_next(std::span<const TokenId> h, std::size_t k) const override {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
    return inner_.top_next(h, k);
  }
  std::string_view token_text(TokenId id) const override { return inner_.token_text(id); }

 private:
  const TokenModel& inner_;
};

}  // namespace

TEST_CASE("the time budget returns the best beams so far") {
  ChainModel m;
  SlowModel slow(m.model);
  BeamConfig cfg;
  cfg.time_budget_ms = 12;
  BeamStats stats;
  const std::vector<TokenId> ctx = {ChainModel::C};
  const auto beams = beam_search(slow, ctx, cfg, &stats);
  CHECK(stats.budget_exhausted);
  REQUIRE_FALSE(beams.empty());
  for (const auto& b : beams) CHECK(b.reason == StopReason::kBudget);
  CHECK(beams.front().tokens.front() == ChainModel::A(0));
}

TEST_CASE("termination contract on 100 random models") {
  const std::vector<std::string> texts = {"C", "a", "b", "c", "(", ")", " ", "\n", "/", "*", "#", "x\n"};
  const auto V = static_cast<TokenId>(texts.size());
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal(0.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    TableModel model(texts);
    std::map<std::pair<TokenId, TokenId>, double> lp;
    for (TokenId last = 0; last < V; ++last) {
      std::vector<double> logits(V);
      for (auto& l : logits) l = normal(rng);
      double z = 0;
      for (double l : logits) z += std::exp(l);
      std::vector<ScoredToken> row;
      for (TokenId w = 1; w < V; ++w) {
        row.push_back({w, logits[w] - std::log(z)});
        lp[{last, w}] = logits[w] - std::log(z);
      }
      model.set(last, row);
    }
    BeamConfig cfg;
    cfg.k = 1 + rng() % 5;
    cfg.t = -1.0 - static_cast<double>(rng() % 8);
    cfg.max_steps = 1 + rng() % 10;
    const char before = "a/ "[rng() % 3];
    BeamStats stats;
    const std::vector<TokenId> ctx = {0};
    const auto beams = beam_search(model, ctx, cfg, &stats, std::string(1, before));

    CHECK(stats.evaluations == total(stats.batch_sizes));
    CHECK(model.calls == 1 + stats.evaluations);
    CHECK(stats.evaluations <= cfg.k * cfg.max_steps);
    for (auto b : stats.batch_sizes) CHECK(b <= cfg.k);

    for (const auto& b : beams) {
      REQUIRE_FALSE(b.tokens.empty());
      CHECK(b.tokens.size() <= cfg.max_steps);
      CHECK(b.logprob >= cfg.t);
      double sum = 0;
      double running = 0;
      TokenId last = 0;
      std::string text;
      for (auto t : b.tokens) {
        const double step = lp.at({last, t});
        CHECK(step <= 0.0);
        running += step;
        CHECK(running >= cfg.t);
        sum += step;
        last = t;
        text += texts[t];
      }
      CHECK(b.logprob == doctest::Approx(sum).epsilon(1e-12));
      CHECK(b.text == text);
      const bool eol = b.reason == StopReason::kEndOfLine;
      REQUIRE((eol || b.reason == StopReason::kMaxSteps));
      const std::size_t checked = eol ? b.tokens.size() - 1 : b.tokens.size();
      for (std::size_t i = 0; i < checked; ++i) CHECK(texts[b.tokens[i]].find('\n') == std::string::npos);
      if (eol) CHECK(texts[b.tokens.back()].find('\n') != std::string::npos);
      if (!eol) CHECK(b.tokens.size() == cfg.max_steps);
      std::string checked_text;
      for (std::size_t i = 0; i < checked; ++i) checked_text += texts[b.tokens[i]];
      CHECK_FALSE(has_comment_start(before, checked_text));
      CHECK(windows_distinct(std::span(b.tokens).first(checked), cfg.loop_window));
    }
    for (std::size_t i = 1; i < beams.size(); ++i) CHECK(beams[i - 1].logprob >= beams[i].logprob);
    for (const auto& d : stats.dropped)
      CHECK((d.reason == StopReason::kThreshold || d.reason == StopReason::kComment ||
             d.reason == StopReason::kLoop));
  }
}
