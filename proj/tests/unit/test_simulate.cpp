#include "cce/common.hpp"
#include "cce/simulate.hpp"

#include <json.hpp>
#include "planted.hpp"
#include "test_support.hpp"
#include "toy_models.hpp"

#include <doctest.h>

#include <atomic>
#include <random>

using namespace cce;
using testing::PlantedStrategy;

namespace {

Candidate cand(std::string text) { return make_candidates("s", {{std::move(text), {}}}).at(0); }

SimulationSample sample(std::size_t pos, std::vector<std::string> texts, std::vector<std::uint8_t> hits) {
  SimulationSample s;
  s.pos = pos;
  for (auto& t : texts) s.candidates.push_back(cand(t));
  s.hits = std::move(hits);
  return s;
}

std::string critical_string(const std::vector<SimulationSample>& samples) {
  std::string out;
  for (const auto& s : samples) out.push_back(s.critical ? '1' : '0');
  return out;
}

CodeFile code_file(std::string path, std::string text) {
  CodeFile f;
  f.path = std::move(path);
  f.text = std::move(text);
  return f;
}

class ThrowingStrategy final : public Strategy {
 public:
  std::string_view id() const override { return "broken"; }
  std::vector<std::string> dimensions() const override { return {}; }
  std::string primary_dimension() const override { return {}; }
  std::unique_ptr<StrategySession> new_session() const override {
    ++sessions;
    throw Error("cannot start");
  }
  mutable std::atomic<int> sessions{0};
};

class FailingQueries final : public Strategy {
 public:
  std::string_view id() const override { return "flaky"; }
  std::vector<std::string> dimensions() const override { return {}; }
  std::string primary_dimension() const override { return {}; }
  std::unique_ptr<StrategySession> new_session() const override { return std::make_unique<S>(); }

 private:
  struct S final : StrategySession {
    std::string_view id() const override { return "flaky"; }
    std::vector<Candidate> query(std::string_view prefix, std::size_t) override {
      if (prefix.size() % 2) throw Error("odd");
      return make_candidates("flaky", {{"z", {}}});
    }
  };
};

}  // namespace

TEST_CASE("label_candidates uses exact character-prefix equality") {
  CHECK(is_hit(cand("DefaultEntries"), "DefaultEntries;"));
  CHECK_FALSE(is_hit(cand("foo"), "bar"));
  CHECK(is_hit(cand("ab"), "abc"));
  CHECK_FALSE(is_hit(cand("abcd"), "abc"));
  const std::vector<Candidate> cs = {cand("ab"), cand("x"), cand("abc")};
  CHECK(label_candidates(cs, "abc") == std::vector<std::uint8_t>{1, 0, 1});
}

TEST_CASE("mark_critical with no hits keeps every position critical") {
  std::vector<SimulationSample> s;
  for (std::size_t p = 0; p < 8; ++p) s.push_back(sample(p, {"q"}, {0}));
  mark_critical(s);
  CHECK(critical_string(s) == "11111111");
}

TEST_CASE("a hit of length 10 at position 5 skips positions 6..15") {
  std::vector<SimulationSample> s;
  for (std::size_t p = 0; p < 20; ++p) s.push_back(sample(p, {}, {}));
  s[5] = sample(5, {"0123456789", "01"}, {1, 1});
  s[8] = sample(8, {"abc"}, {1});
  mark_critical(s);
  CHECK(critical_string(s) == "11111100000000001111");
  auto again = s;
  mark_critical(again);
  CHECK(again == s);
}

TEST_CASE("simulate_file matches the planted expectation table") {
  for (const auto& c : testing::planted_cases()) {
    CAPTURE(c.text);
    const PlantedStrategy planted(c.plants);
    const std::vector<const Strategy*> strategies = {&planted};
    const auto out = simulate_file(code_file("f.java", c.text), strategies, {});
    REQUIRE(out.samples.size() == c.text.size());
    for (std::size_t p = 0; p < out.samples.size(); ++p) {
      CHECK(out.samples[p].pos == p);
      auto it = c.hits.find(p);
      const auto expected = it == c.hits.end() ? std::vector<std::uint8_t>{} : it->second;
      CHECK(out.samples[p].hits == expected);
    }
    CHECK(critical_string(out.samples) == c.critical);
  }
}

TEST_CASE("sample count equals the character length of every toy file") {
  const auto& toy = testing::toy_strategies();
  SimulationRunConfig cfg;
  cfg.workers = 4;
  const auto files = testing::toy_corpus().in_split(Split::kSimulation);
  const auto results = run_parallel(files, toy.all, cfg);
  REQUIRE(results.size() == files.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto* f = testing::toy_corpus().find(results[i].file);
    REQUIRE(f != nullptr);
    CHECK_FALSE(results[i].failed);
    CHECK(results[i].samples.size() == f->text.size());
    for (const auto& s : results[i].samples) {
      CHECK(s.hits.size() == s.candidates.size());
      for (std::size_t j = 0; j < s.candidates.size(); ++j)
        CHECK(s.hits[j] == (std::string_view(f->text).substr(s.pos).starts_with(s.candidates[j].text) ? 1 : 0));
    }
  }
  const auto stats = critical_stats(results);
  MESSAGE("critical fraction on the simulation split: ", stats.fraction());
  CHECK(stats.fraction() > 0.0);
  CHECK(stats.fraction() < 1.0);
}

TEST_CASE("candidates never depend on characters at or after the cursor") {
  const auto& toy = testing::toy_strategies();
  const auto* f = testing::toy_corpus().in_split(Split::kTest).front();
  const auto full = simulate_file(*f, toy.all, {});
  std::mt19937_64 rng(41);
  for (int i = 0; i < 25; ++i) {
    const std::size_t p = rng() % f->text.size();
    SessionSet fresh(toy.all);
    const auto truncated = f->text.substr(0, p);
    CHECK(fresh.gather(truncated, kMaxCandidatesPerStrategy) == full.samples[p].candidates);
    const auto part = simulate_file(code_file(f->path, f->text.substr(0, p + 1)), toy.all, {});
    CHECK(part.samples[p].candidates == full.samples[p].candidates);
  }
}

TEST_CASE("simulation is deterministic and independent of the worker count") {
  const auto& toy = testing::toy_strategies();
  const auto files = testing::toy_corpus().in_split(Split::kTest);
  SimulationRunConfig one;
  SimulationRunConfig four;
  four.workers = 4;
  const auto a = run_parallel(files, toy.all, one);
  const auto b = run_parallel(files, toy.all, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].file == b[i].file);
    CHECK(a[i].samples == b[i].samples);
  }
  CHECK(std::is_sorted(a.begin(), a.end(),
                       [](const FileSamples& x, const FileSamples& y) { return x.file < y.file; }));
  SimulationRunConfig zero;
  zero.workers = 0;
  CHECK_THROWS_AS(run_parallel(files, toy.all, zero), ConfigError);
}

TEST_CASE("a failing strategy query contributes nothing but the sample is kept") {
  const FailingQueries flaky;
  const std::vector<const Strategy*> strategies = {&flaky};
  const auto out = simulate_file(code_file("f.java", "abcd"), strategies, {});
  REQUIRE(out.samples.size() == 4);
  CHECK(out.samples[0].candidates.size() == 1);
  CHECK(out.samples[1].candidates.empty());
}

TEST_CASE("a file that keeps failing is retried once and marked failed") {
  const ThrowingStrategy broken;
  const std::vector<const Strategy*> strategies = {&broken};
  const auto f = code_file("a.java", "x");
  const std::vector<const CodeFile*> files = {&f};
  const auto out = run_parallel(files, strategies, {});
  REQUIRE(out.size() == 1);
  CHECK(out[0].failed);
  CHECK(out[0].error == "cannot start");
  CHECK(broken.sessions == 2);
}

TEST_CASE("sample JSON roundtrip") {
  auto s = sample(3, {"ab", "c"}, {1, 0});
  s.candidates[0].scores["global_count"] = 4.5;
  s.critical = false;
  const auto line = sample_to_json("p/A.java", s);
  const auto json = nlohmann::json::parse(line);
  CHECK(json["file"] == "p/A.java");
  CHECK(json["pos"] == 3);
  CHECK(json["critical"] == 0);
  CHECK(json["candidates"][0]["hit"] == 1);
  CHECK(json["candidates"][0]["text"] == "ab");
  CHECK(sample_from_json(line) == s);
}

TEST_CASE("sample store roundtrip") {
  const PlantedStrategy planted({{0, {"ab"}}, {3, {"de", "x"}}});
  const std::vector<const Strategy*> strategies = {&planted};
  const auto f1 = code_file("p/A.java", "abcdef\n");
  const auto f2 = code_file("q/B.java", "abcxyz");
  const std::vector<const CodeFile*> files = {&f2, &f1};
  const auto results = run_parallel(files, strategies, {});
  testing::TempDir dir("sample_store");
  write_sample_store(dir.path(), results, files);
  CHECK(std::filesystem::exists(dir.path() / "index.json"));
  CHECK(std::filesystem::exists(dir.path() / "p__A.java.jsonl"));
  CHECK(read_file(dir.path() / "truth" / "p__A.java.txt") == f1.text);
  const auto back = load_sample_store(dir.path());
  REQUIRE(back.size() == 2);
  CHECK(back[0].samples.file == "p/A.java");
  CHECK(back[0].text == f1.text);
  CHECK(back[0].samples.samples == results[0].samples);
  CHECK(back[1].samples.samples == results[1].samples);
  CHECK_THROWS_AS(load_sample_store(dir.path() / "absent"), MissingArtifact);
  CHECK(shard_name("a/b/C.java") == "a__b__C.java");
}
