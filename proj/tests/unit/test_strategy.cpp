#include "cce/candidate.hpp"
#include "cce/common.hpp"
#include "cce/global_frequency.hpp"
#include "cce/lexer.hpp"
#include "cce/local_frequency.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace cce;

namespace {

struct Entry {
  std::string word;
  std::uint64_t count;
};

// Filter the stored words by prefix (the prefix itself excluded), sort by
// count then text, keep k, strip the typed part.
std::vector<std::string> oracle(std::vector<Entry> vocab, std::string_view prefix, std::size_t k) {
  std::vector<Entry> hits;
  for (auto& e : vocab)
    if (e.word.size() > prefix.size() && e.word.compare(0, prefix.size(), prefix) == 0)
      hits.push_back(e);
  std::sort(hits.begin(), hits.end(), [](const Entry& a, const Entry& b) {
    return a.count != b.count ? a.count > b.count : a.word < b.word;
  });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < hits.size() && i < k; ++i) out.push_back(hits[i].word.substr(prefix.size()));
  return out;
}

std::vector<std::string> texts(const std::vector<Candidate>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.text);
  return out;
}

TrieIndex small_trie() {
  TrieIndex t;
  t.insert("result", {10, 3, 2});
  t.insert("return", {7, 5, 2});
  t.insert("reset", {2, 1, 1});
  t.finalize();
  return t;
}

CodeFile file(std::string project, std::string name, std::string text) {
  CodeFile f;
  f.project_id = project;
  f.path = project + "/" + name;
  f.text = std::move(text);
  return f;
}

std::string random_prefix(std::mt19937_64& rng, const std::vector<Entry>& vocab) {
  if (rng() % 4 == 0) {
    std::string s;
    const auto len = 1 + rng() % 3;
    for (std::size_t i = 0; i < len; ++i) s.push_back("abcdefgrstxyzACEGR_"[rng() % 19]);
    return s;
  }
  const auto& w = vocab[rng() % vocab.size()].word;
  return w.substr(0, 1 + rng() % w.size());
}

}  // namespace

TEST_CASE("global query orders by count then text") {
  const GlobalFrequencyStrategy g(small_trie());
  CHECK(texts(g.query("re", 5)) == std::vector<std::string>{"sult", "turn", "set"});
  CHECK(texts(g.query("re", 1)) == std::vector<std::string>{"sult"});
  CHECK(g.query("zz", 5).empty());
  CHECK(g.query("", 5).empty());
  const auto top = g.query("re", 1).at(0);
  CHECK(top.scores.at("global_count") == 10);
  CHECK(top.scores.at("global_file_count") == 3);
  CHECK(top.scores.at("global_project_count") == 2);
  CHECK(top.strategies == std::vector<std::string>{"global"});
  CHECK(top.ranks.at("global") == 1);
}

TEST_CASE("global_build drops rare short sub-tokens") {
  std::vector<CodeFile> files = {
      file("p1", "A.java", "int abcValue = xyzCount; longwordThing();"),
      file("p2", "B.java", "int xyzOther;"),
  };
  std::vector<const CodeFile*> ptrs;
  for (const auto& f : files) ptrs.push_back(&f);
  GlobalBuildStats stats;
  const auto trie = global_build(ptrs, {}, &stats);
  auto has = [&](std::string_view w) {
    const auto m = trie.lookup(w, 100);
    return std::any_of(m.begin(), m.end(), [&](const WordMatch& x) { return x.word == w; });
  };
  CHECK_FALSE(has("abc"));
  CHECK(has("xyz"));
  CHECK(has("longword"));
  CHECK(has("Value"));
  CHECK(stats.kept == trie.size());
  CHECK(stats.kept < stats.subtoken_vocabulary);

  GlobalBuildOptions either;
  either.combine = RareFilter::kOr;
  const auto strict = global_build(ptrs, either);
  const auto m = strict.lookup("longword", 10);
  CHECK(m.empty());
  CHECK(strict.lookup("xyz", 10).empty());
  CHECK(strict.size() < trie.size());
}

TEST_CASE("global vocabulary is smaller than the token vocabulary on the toy corpus") {
  GlobalBuildStats stats;
  const auto trie = global_build(testing::toy_corpus().in_split(Split::kTrain), {}, &stats);
  CHECK(trie.size() == stats.kept);
  CHECK(stats.kept < stats.token_vocabulary);
  CHECK(global_build(std::vector<const CodeFile*>{}, {}).size() == 0);
}

TEST_CASE("global query equals a filter-and-sort oracle on 1000 prefixes") {
  const GlobalFrequencyStrategy g(global_build(testing::toy_corpus().in_split(Split::kTrain), {}));
  std::vector<Entry> vocab;
  for (const auto& m : g.trie().words()) vocab.push_back({m.word, m.stats.count});
  REQUIRE(vocab.size() > 50);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const auto prefix = random_prefix(rng, vocab);
    const std::size_t k = 1 + rng() % 8;
    REQUIRE(texts(g.query(prefix, k)) == oracle(vocab, prefix, k));
  }
}

TEST_CASE("global serialization roundtrip") {
  const GlobalFrequencyStrategy g(global_build(testing::toy_corpus().in_split(Split::kTrain), {}));
  const auto back = GlobalFrequencyStrategy::deserialize(g.serialize());
  CHECK(back.trie().words() == g.trie().words());
  CHECK(back.serialize() == g.serialize());
}

TEST_CASE("global session completes the current sub-token") {
  CHECK(current_subtoken("int getRes") == "Res");
  CHECK(current_subtoken("x = re") == "re");
  CHECK(current_subtoken("x = ") == "");
  CHECK(current_subtoken("get_") == "");
  const GlobalFrequencyStrategy g(small_trie());
  auto s = g.new_session();
  CHECK(texts(s->query("int re", 5)) == std::vector<std::string>{"sult", "turn", "set"});
  CHECK(s->query("int x = ", 5).empty());
}

TEST_CASE("local lookup follows counts") {
  LocalFrequencyState st;
  for (int i = 0; i < 3; ++i) st.update("foo");
  st.update("foobar");
  const auto m = st.lookup("foo", 5);
  REQUIRE(m.size() == 2);
  CHECK(m[0].word == "foo");
  CHECK(m[1].word == "foobar");
  CHECK(texts(st.query("foo", 5)) == std::vector<std::string>{"bar"});
  CHECK(LocalFrequencyState{}.query("a", 5).empty());
}

TEST_CASE("local top candidate is the most frequent token in the file") {
  std::string text;
  for (int i = 0; i < 30; ++i) text += "AclEntry e" + std::to_string(i) + ";\n";
  text += "AclList a; AclList b;\nint x = Acl";
  const LocalFrequencyStrategy local;
  auto s = local.new_session();
  const auto out = s->query(text, 5);
  REQUIRE(out.size() == 2);
  CHECK(out[0].text == "Entry");
  CHECK(out[0].scores.at("local_count") == 30);
  CHECK(out[1].text == "List");
  CHECK(s->query("Acl", 5).empty());
}

TEST_CASE("local query equals a filter-and-sort oracle on 1000 prefixes") {
  LocalFrequencyState st;
  std::map<std::string, std::uint64_t> counts;
  for (const auto* f : testing::toy_corpus().in_split(Split::kSimulation))
    for (const auto& t : tokenize(f->text)) {
      st.update(t);
      if (t.is_word()) ++counts[std::string(t.text)];
    }
  std::vector<Entry> vocab;
  for (const auto& [w, c] : counts) vocab.push_back({w, c});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto prefix = random_prefix(rng, vocab);
    const std::size_t k = 1 + rng() % 8;
    REQUIRE(texts(st.query(prefix, k)) == oracle(vocab, prefix, k));
  }
}

TEST_CASE("local session only counts tokens completed before the cursor") {
  const auto* f = testing::toy_corpus().in_split(Split::kTest).front();
  const LocalFrequencyStrategy local;
  auto s = local.new_session();
  for (std::size_t p = 0; p <= f->text.size(); p += 7) {
    const auto prefix = std::string_view(f->text).substr(0, p);
    auto toks = tokenize(prefix);
    std::map<std::string, std::uint64_t> counts;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i)
      if (toks[i].is_word()) ++counts[std::string(toks[i].text)];
    std::vector<Entry> vocab;
    for (const auto& [w, c] : counts) vocab.push_back({w, c});
    const auto typed = prefix.substr(prefix.size() - trailing_identifier_length(prefix));
    const auto expected = typed.empty() ? std::vector<std::string>{} : oracle(vocab, typed, 5);
    REQUIRE(texts(s->query(prefix, 5)) == expected);
  }
}

TEST_CASE("merge unifies identical texts") {
  const auto g = make_candidates("global", {{"DefaultEntries", {{"global_count", 4}}}, {"x", {{"global_count", 1}}}});
  const auto l = make_candidates("local", {{"DefaultEntries", {{"local_count", 2}}}});
  const std::vector<std::vector<Candidate>> lists = {g, l};
  const auto m = merge_candidates(lists);
  REQUIRE(m.size() == 2);
  CHECK(m[0].text == "DefaultEntries");
  CHECK(m[0].strategies == std::vector<std::string>{"global", "local"});
  CHECK(m[0].scores.at("global_count") == 4);
  CHECK(m[0].scores.at("local_count") == 2);
  CHECK(m[0].ranks.at("global") == 1);
  CHECK(m[0].ranks.at("local") == 1);
}

TEST_CASE("merge of disjoint lists keeps every candidate") {
  const auto g = make_candidates("global", {{"a", {{"global_count", 4}}}, {"b", {{"global_count", 3}}}});
  const auto l = make_candidates("local", {{"c", {{"local_count", 2}}}});
  const std::vector<std::vector<Candidate>> lists = {g, l};
  CHECK(merge_candidates(lists).size() == 3);
  CHECK(merge_candidates(std::vector<std::vector<Candidate>>{}).empty());
  CHECK(merge_candidates(std::vector<std::vector<Candidate>>{{}, {}}).empty());
}

TEST_CASE("merge is order-insensitive and idempotent") {
  const auto g = make_candidates("global", {{"ab", {{"global_count", 4}}}, {"b", {{"global_count", 3}}}});
  const auto l = make_candidates("local", {{"b", {{"local_count", 2}}}, {"ab", {{"local_count", 1}}}});
  const auto lm = make_candidates("lm", {{"zz", {{"lm_logprob", -1}}}, {"ab", {{"lm_logprob", -2}}}});
  std::vector<std::vector<Candidate>> lists = {g, l, lm};
  const auto ref = merge_candidates(lists);
  std::sort(lists.begin(), lists.end(), [](auto& a, auto& b) { return a[0].strategies < b[0].strategies; });
  do {
    CHECK(merge_candidates(lists) == ref);
  } while (std::next_permutation(lists.begin(), lists.end(), [](auto& a, auto& b) {
    return a[0].strategies < b[0].strategies;
  }));
  const std::vector<std::vector<Candidate>> again = {ref};
  CHECK(merge_candidates(again) == ref);
  const std::vector<std::vector<Candidate>> doubled = {ref, ref};
  CHECK(merge_candidates(doubled) == ref);
}

TEST_CASE("merge rejects conflicting dimension values") {
  const auto a = make_candidates("global", {{"x", {{"global_count", 1}}}});
  const auto b = make_candidates("global", {{"x", {{"global_count", 2}}}});
  const std::vector<std::vector<Candidate>> lists = {a, b};
  CHECK_THROWS_AS(merge_candidates(lists), Error);
}
