#include "cce/common.hpp"
#include "cce/eval.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace cce;

namespace {

struct Shown {
  std::vector<std::string> rows;
  bool accepted = true;
};

using Script = std::map<std::size_t, Shown>;

CompletionSource scripted(const Script& script) {
  return [&script](std::size_t pos, std::string_view) {
    CompletionList list;
    const auto it = script.find(pos);
    if (it == script.end()) return list;
    std::vector<RankedEntry> entries;
    for (const auto& r : it->second.rows) entries.push_back({r, {}});
    list.candidates = make_candidates("s", entries);
    list.accepted = it->second.accepted;
    return list;
  };
}

struct Oracle {
  long long typed = 0;
  long long browsed = 0;
  long long accepted_chars = 0;
  long long accepted = 0;
  std::vector<int> spectrum;
};

// Walks the text one keystroke at a time, reading each shown list row by row
// from the top and stopping at the longest correct row.
Oracle oracle_replay(const std::string& text, const Script& script) {
  Oracle o;
  o.spectrum.assign(text.size(), -1);
  std::size_t cursor = 0;
  while (cursor < text.size()) {
    ++o.typed;
    const auto it = script.find(cursor);
    std::size_t take = 0;
    int take_row = 0;
    if (it != script.end() && it->second.accepted && !it->second.rows.empty()) {
      const auto& rows = it->second.rows;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty() || text.compare(cursor, row.size(), row) != 0) continue;
        if (row.size() > take) {
          take = row.size();
          take_row = static_cast<int>(r) + 1;
        }
      }
      int read = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        ++read;
        if (take_row == static_cast<int>(r) + 1) break;
      }
      o.browsed += read;
      o.spectrum[cursor] = take ? read : read + 1;
    } else {
      o.spectrum[cursor] = 1;
    }
    if (take) {
      for (std::size_t q = cursor + 1; q < cursor + take; ++q) o.spectrum[q] = 0;
      o.accepted_chars += static_cast<long long>(take);
      ++o.accepted;
      cursor += take;
    } else {
      ++cursor;
    }
  }
  return o;
}

std::vector<CompletionEvent> events_with_hits(std::vector<std::vector<int>> hits) {
  std::vector<CompletionEvent> out;
  for (auto& h : hits) {
    CompletionEvent e;
    e.shown = true;
    e.list_length = 5;
    e.hit_positions = h;
    e.chosen_rank = h.empty() ? 0 : h.front();
    e.chosen_length = h.empty() ? 0 : 3;
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("a length-14 completion at rank 1 saves 13 keystrokes for a browse cost of 1") {
  const std::string text = "DefaultEntries";
  const Script script = {{0, {{"DefaultEntries", "Default"}}}};
  const auto ledger = replay("A.java", text, scripted(script));
  CHECK(ledger.n_ori == 14);
  CHECK(ledger.n_cc == 1);
  CHECK(benefit(ledger) == 13);
  CHECK(hidden_cost(ledger.events) == 1);
  CHECK(*bcr(benefit(ledger), hidden_cost(ledger.events)) == 13.0);
  CHECK(ledger.cost[0] == 1);
  for (std::size_t i = 1; i < 14; ++i) CHECK(ledger.cost[i] == 0);
}

TEST_CASE("a source that never fires types every character") {
  const auto ledger = replay("A.java", "int x = 1;", [](std::size_t, std::string_view) { return CompletionList{}; });
  CHECK(ledger.n_cc == ledger.n_ori);
  CHECK(ledger.events.empty());
  CHECK(benefit(ledger) == 0);
  CHECK_FALSE(bcr(0, hidden_cost(ledger.events)).has_value());
  CHECK_FALSE(accuracy_at_k(ledger.events, 1).has_value());
}

TEST_CASE("two completions of lengths 4 and 6 in a 100-character file save 8") {
  std::string text(100, 'x');
  text.replace(10, 4, "abcd");
  text.replace(50, 6, "efghij");
  const Script script = {{10, {{"abcd"}}}, {50, {{"efghij"}}}};
  const auto ledger = replay("A.java", text, scripted(script));
  CHECK(benefit(ledger) == 8);
  CHECK(hidden_cost(ledger.events) == 2);
  CHECK(*bcr(8, 4) == 2.0);
}

TEST_CASE("hidden cost uses the rank of the longest correct answer") {
  const std::string text = "abcdefghijkl";
  const Script script = {{0, {{"x", "abc", "y", "abcdefghi", "z"}}}};
  const auto ledger = replay("A.java", text, scripted(script));
  REQUIRE(ledger.events.size() == 1);
  CHECK(ledger.events[0].hit_positions == std::vector<int>{2, 4});
  CHECK(ledger.events[0].chosen_rank == 4);
  CHECK(hidden_cost(ledger.events) == 4);
  CHECK(ledger.cost[0] == 4);
}

TEST_CASE("shown and blocked lists without a hit") {
  const std::string text = "abc";
  const Script script = {{0, {{"q1", "q2", "q3", "q4", "q5"}}}, {1, {{"zz"}, false}}};
  const auto ledger = replay("A.java", text, scripted(script));
  CHECK(hidden_cost(ledger.events) == 5);
  CHECK(ledger.cost == std::vector<int>{6, 1, 1});
  REQUIRE(ledger.events.size() == 2);
  CHECK_FALSE(ledger.events[1].shown);
  CHECK(*invalid_list_rate(ledger.events) == 1.0);
}

TEST_CASE("accuracy at K") {
  const auto events = events_with_hits({{1}, {3}, {}});
  CHECK(*accuracy_at_k(events, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(*accuracy_at_k(events, 5) == doctest::Approx(2.0 / 3.0));
  CHECK(*accuracy_at_k(events_with_hits({{1}, {1}}), 3) == 1.0);
  CHECK_THROWS_AS(accuracy_at_k(events, 0), Error);
  auto blocked = events;
  for (auto& e : blocked) e.shown = false;
  CHECK_FALSE(accuracy_at_k(blocked, 1).has_value());
}

TEST_CASE("nearest-rank quantile") {
  CHECK(nearest_rank_quantile({1, 1, 2, 5}, 0.9) == 5);
  CHECK(nearest_rank_quantile({1, 1, 2, 5}, 0.5) == 1);
  CHECK(nearest_rank_quantile({3}, 0.9) == 3);
  CHECK_THROWS_AS(nearest_rank_quantile({}, 0.9), Error);
}

TEST_CASE("random ledgers agree with a row-by-row replay") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> len(20, 120), letter(0, 2), coin(0, 3);
    std::string text;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) text += static_cast<char>('a' + letter(rng));
    Script script;
    for (int p = 0; p < n; ++p) {
      if (coin(rng) == 0) continue;
      Shown s;
      s.accepted = coin(rng) != 0;
      const int rows = 1 + static_cast<int>(rng() % 5);
      for (int r = 0; r < rows; ++r) {
        const std::size_t l = 1 + rng() % 6;
        std::string row = text.substr(p, l);
        if (coin(rng) == 0) row.back() = row.back() == 'a' ? 'b' : 'a';
        if (std::find(s.rows.begin(), s.rows.end(), row) == s.rows.end()) s.rows.push_back(row);
      }
      script.emplace(p, s);
    }
    const auto ledger = replay("r.java", text, scripted(script));
    const auto o = oracle_replay(text, script);
    CHECK(static_cast<long long>(ledger.n_cc) == o.typed);
    CHECK(hidden_cost(ledger.events) == o.browsed);
    CHECK(ledger.cost == o.spectrum);
    CHECK(benefit(ledger) == o.accepted_chars - o.accepted);
    CHECK(ledger.n_cc + static_cast<std::size_t>(o.accepted_chars - o.accepted) == ledger.n_ori);
    const auto b = bcr(benefit(ledger), hidden_cost(ledger.events));
    if (o.browsed > 0) CHECK(*b == static_cast<double>(o.accepted_chars - o.accepted) / static_cast<double>(o.browsed));
    long long zeros = 0;
    for (int c : ledger.cost) {
      CHECK(c >= 0);
      CHECK(c <= 6);
      zeros += c == 0;
    }
    CHECK(zeros == o.accepted_chars - o.accepted);
    for (int k = 1; k < 6; ++k) {
      const auto a = accuracy_at_k(ledger.events, k), next = accuracy_at_k(ledger.events, k + 1);
      if (a) CHECK(*a <= *next);
    }
    CHECK(replay("r.java", text, scripted(script)).cost == ledger.cost);
  }
}

TEST_CASE("summaries add up over files") {
  const Script s1 = {{0, {{"DefaultEntries"}}}};
  const Script s2 = {{0, {{"q", "abc"}}}, {3, {{"zz"}}}};
  std::vector<SessionLedger> ledgers = {replay("a", "DefaultEntries", scripted(s1)), replay("b", "abcdef", scripted(s2))};
  const auto m = summarize(ledgers);
  CHECK(m.files == 2);
  CHECK(m.n_ori == 20);
  CHECK(m.benefit == 13 + 2);
  CHECK(m.hidden_cost == 1 + 2 + 1);
  CHECK(m.shown == 3);
  CHECK(m.hit_events == 2);
  CHECK(*m.accuracy1 == doctest::Approx(1.0 / 3.0));
  CHECK(*m.accuracy5 == doctest::Approx(2.0 / 3.0));
  CHECK(*m.bcr == 15.0 / 4.0);
  CHECK(*m.invalid_list_rate == doctest::Approx(1.0 / 3.0));
  CHECK(*m.hit_position_p90 == 2);
  CHECK(*m.completeness == 0.5);
  CHECK(*m.mean_prefix_length == 0.0);
  std::vector<SessionLedger> reversed = {ledgers[1], ledgers[0]};
  CHECK(metrics_csv_row("x", summarize(reversed)) == metrics_csv_row("x", m));
}

TEST_CASE("own lists keep a strategy's ranks") {
  std::vector<Candidate> lists[] = {make_candidates("global", {{"ab", {{"global_count", 3}}}, {"a", {{"global_count", 2}}}}),
                                    make_candidates("local", {{"a", {{"local_count", 1}}}, {"abc", {{"local_count", 1}}}})};
  const auto merged = merge_candidates(lists);
  const auto own = own_list(merged, "local");
  REQUIRE(own.size() == 2);
  CHECK(own[0].text == "a");
  CHECK(own[1].text == "abc");
  CHECK(own[0].strategies == std::vector<std::string>{"local"});
  CHECK(own_list(merged, "lm").empty());
}

TEST_CASE("ablation variants") {
  const auto v = ablation_variants(0.4);
  REQUIRE(v.size() == 4);
  CHECK(v[0].name == "normalized");
  CHECK(v[1].name == "fusion");
  CHECK(v[2].name == "acceptance+normalized");
  CHECK(v[3].name == "acceptance+fusion");
  CHECK(v[3].cfg.gate);
  CHECK(v[3].cfg.theta == 0.4);
  const std::vector<std::string> ids = {"global", "lm"};
  const auto s = strategy_variants(ids);
  CHECK(s[1].only_strategy == "lm");
  CHECK_FALSE(s[1].cfg.gate);
}

TEST_CASE("a zero threshold gate evaluates like no gate") {
  SimulationSample s0;
  s0.pos = 0;
  s0.candidates = make_candidates("global", {{"abc", {{"global_count", 4}}}, {"ab", {{"global_count", 1}}}});
  StoredFile f;
  f.text = "abcd";
  f.samples.file = "f";
  f.samples.samples.resize(4);
  for (std::size_t i = 0; i < 4; ++i) f.samples.samples[i].pos = i;
  f.samples.samples[0] = s0;
  f.samples.samples[3].candidates = make_candidates("global", {{"x", {{"global_count", 2}}}});
  Scaler scaler;
  scaler.fit({{"global_count", {1, 2, 4}}});
  PipelineModels pm;
  pm.scaler = &scaler;
  pm.primary = {{"global", "global_count"}};
  PipelineVariant no_gate{"n", {}, {}};
  no_gate.cfg.gate = false;
  no_gate.cfg.mode = RankMode::kNormalized;
  PipelineVariant zero = no_gate;
  zero.cfg.gate = true;
  zero.cfg.theta = 0.0;
  const std::vector<StoredFile> store = {f};
  const auto a = evaluate_store(store, pm, no_gate);
  const auto b = evaluate_store(store, pm, zero);
  CHECK(a[0].cost == b[0].cost);
  CHECK(metrics_csv_row("x", summarize(a)) == metrics_csv_row("x", summarize(b)));
  CHECK(benefit(a[0]) == 2);
  CHECK(a[0].cost == std::vector<int>{1, 0, 0, 2});
  CHECK(spectrum_csv(a[0]) == "position,cost\n0,1\n1,0\n2,0\n3,2\n");
}
