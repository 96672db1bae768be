#include "cce/bpe.hpp"
#include "cce/common.hpp"
#include "cce/lm_strategy.hpp"
#include "cce/ngram_lm.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace cce;

namespace {

std::vector<TokenId> random_history(std::mt19937_64& rng, const NgramModel& m) {
  std::vector<TokenId> h;
  if (rng() % 3 == 0) h.push_back(m.bos());
  const auto len = rng() % 6;
  for (std::size_t i = 0; i < len; ++i) h.push_back(static_cast<TokenId>(rng() % m.vocab_size()));
  return h;
}

NgramModel random_model(std::mt19937_64& rng, std::size_t vocab, std::size_t order) {
  std::vector<std::vector<TokenId>> seqs(30);
  for (auto& s : seqs) {
    const auto len = 5 + rng() % 40;
    TokenId prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      // Skewed transitions so that higher orders carry information.
      prev = rng() % 3 == 0 ? static_cast<TokenId>(rng() % (vocab - 2))
                            : static_cast<TokenId>((prev * 3 + 1) % (vocab - 2));
      s.push_back(prev);
    }
  }
  return NgramModel::train(seqs, vocab, order);
}

struct ToyLm {
  BpeModel bpe;
  NgramModel lm;
  ToyLm() {
    std::vector<std::string> texts;
    const auto train = testing::toy_corpus().in_split(Split::kTrain);
    for (const auto* f : train) texts.push_back(f->text);
    bpe = BpeModel::train(texts, 1024);
    const auto seqs = lm_training_sequences(train, bpe);
    lm = NgramModel::train(seqs, bpe.vocab_size());
  }
};

const ToyLm& toy_lm() {
  static const ToyLm lm;
  return lm;
}

std::vector<std::string> texts(const std::vector<Candidate>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.text);
  return out;
}

}  // namespace

TEST_CASE("order-2 model on a b a b") {
  const TokenId a = 0, b = 1;
  const std::vector<std::vector<TokenId>> seqs = {{a, b, a, b}};
  const auto m = NgramModel::train(seqs, 2, 2);
  const std::vector<TokenId> ha = {a};
  CHECK(m.relative_frequency(ha, b) == 1.0);
  CHECK(m.relative_frequency(ha, a) == 0.0);
  // Unigram S(w) = (c(w)+1)/(N+V) = 3/6 for both tokens. After "a" only b
  // was seen, so S(b|a) = 1, S(a|a) = 0.4 * 3/6 and Z(a) = 1.2.
  CHECK(m.logprob(ha, b) == doctest::Approx(std::log(1.0 / 1.2)).epsilon(1e-12));
  CHECK(m.logprob(ha, a) == doctest::Approx(std::log(0.2 / 1.2)).epsilon(1e-12));
  const std::vector<TokenId> hbos = {m.bos()};
  CHECK(m.relative_frequency(hbos, a) == 1.0);
}

TEST_CASE("an unseen history backs off to the add-one unigram") {
  const std::vector<std::vector<TokenId>> seqs = {{0, 1, 0, 1}, {0, 2}};
  const auto m = NgramModel::train(seqs, 5, 3);
  // Unigram counts: 0:3, 1:2, 2:1, N = 6, V = 5.
  const std::vector<TokenId> unseen = {4, 3};
  const double counts[] = {3, 2, 1, 0, 0};
  for (TokenId w = 0; w < 5; ++w)
    CHECK(m.logprob(unseen, w) == doctest::Approx(std::log((counts[w] + 1) / 11.0)).epsilon(1e-12));
  CHECK(m.logprob({}, 0) == m.logprob(unseen, 0));
}

TEST_CASE("train rejects bad parameters") {
  const std::vector<std::vector<TokenId>> seqs = {{0, 1}};
  CHECK_THROWS_AS(NgramModel::train(seqs, 2, 0), Error);
  CHECK_THROWS_AS(NgramModel::train(seqs, 0, 2), Error);
  CHECK_THROWS_AS(NgramModel::train(seqs, 1, 2), Error);
  const auto m = NgramModel::train(seqs, 2, 2);
  CHECK_THROWS_AS(m.logprob({}, 7), Error);
}

TEST_CASE("every conditional distribution sums to one on 100 random contexts") {
  std::mt19937_64 rng(17);
  const auto m = random_model(rng, 12, 4);
  for (int i = 0; i < 100; ++i) {
    const auto h = random_history(rng, m);
    double sum = 0;
    for (TokenId w = 0; w < m.vocab_size(); ++w) sum += std::exp(m.logprob(h, w));
    CHECK(sum <= 1.0 + 1e-6);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("normalization holds on the toy LM") {
  const auto& toy = toy_lm();
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    const auto h = random_history(rng, toy.lm);
    double sum = 0;
    for (TokenId w = 0; w < toy.lm.vocab_size(); ++w) sum += std::exp(toy.lm.logprob(h, w));
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("top_next equals a full sort of every token") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 5; ++round) {
    const auto m = random_model(rng, 10 + round * 7, 2 + round % 4);
    for (int i = 0; i < 60; ++i) {
      const auto h = random_history(rng, m);
      const std::size_t k = 1 + rng() % 12;
      std::vector<ScoredToken> all;
      for (TokenId w = 0; w < m.vocab_size(); ++w) all.push_back({w, m.logprob(h, w)});
      std::sort(all.begin(), all.end(), [](const ScoredToken& a, const ScoredToken& b) {
        return a.logprob != b.logprob ? a.logprob > b.logprob : a.id < b.id;
      });
      all.resize(std::min(k, all.size()));
      const auto top = m.top_next(h, k);
      REQUIRE(top.size() == all.size());
      for (std::size_t j = 0; j < top.size(); ++j) {
        CHECK(top[j].id == all[j].id);
        CHECK(top[j].logprob == doctest::Approx(all[j].logprob).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("serialization roundtrip keeps every probability") {
  std::mt19937_64 rng(29);
  const auto m = random_model(rng, 15, 3);
  const auto back = NgramModel::deserialize(m.serialize());
  CHECK(back.order() == m.order());
  CHECK(back.vocab_size() == m.vocab_size());
  CHECK(back.context_count() == m.context_count());
  CHECK(back.serialize() == m.serialize());
  for (int i = 0; i < 50; ++i) {
    const auto h = random_history(rng, m);
    for (TokenId w = 0; w < m.vocab_size(); ++w) CHECK(back.logprob(h, w) == m.logprob(h, w));
  }
  CHECK_THROWS_AS(NgramModel::deserialize("nonsense"), Error);
}

TEST_CASE("lm_anchor") {
  CHECK(lm_anchor("x = ") == 4u);
  CHECK(lm_anchor("x = foo") == 4u);
  CHECK(lm_anchor("a.b") == 2u);
  CHECK_FALSE(lm_anchor("foo"));
  CHECK_FALSE(lm_anchor(""));
  CHECK_FALSE(lm_anchor("x = 1"));
}

TEST_CASE("candidates_from filters by the typed characters") {
  std::vector<Beam> beams(5);
  beams[0] = {{}, -1.0, "getName();\n", StopReason::kEndOfLine};
  beams[1] = {{}, -1.5, "getValue", StopReason::kMaxSteps};
  beams[2] = {{}, -2.0, "set(x)", StopReason::kMaxSteps};
  beams[3] = {{}, -2.5, "get   \n", StopReason::kEndOfLine};
  beams[4] = {{}, -3.0, "getName();\n", StopReason::kEndOfLine};
  const auto all = LmStrategy::candidates_from(beams, "", 5);
  CHECK(texts(all) == std::vector<std::string>{"getName();", "getValue", "set(x)", "get   "});
  const auto typed = LmStrategy::candidates_from(beams, "get", 5);
  CHECK(texts(typed) == std::vector<std::string>{"Name();", "Value"});
  CHECK(typed[0].scores.at("lm_logprob") == -1.0);
  CHECK(texts(LmStrategy::candidates_from(beams, "get", 1)) == std::vector<std::string>{"Name();"});
}

TEST_CASE("a repeated query is served from the cache with zero evaluations") {
  const auto& toy = toy_lm();
  const LmStrategy strategy(toy.bpe, toy.lm);
  LmSession session(strategy);
  const std::string prefix = "    int count = ";
  const auto first = session.query(prefix, 5);
  const auto evals = session.evaluations();
  CHECK(evals > 0);
  const auto second = session.query(prefix, 5);
  CHECK(session.evaluations() == evals);
  CHECK(session.cache_hits() == 1);
  CHECK(second == first);
}

TEST_CASE("typing one more identifier character replays the cached beams") {
  const auto& toy = toy_lm();
  const LmStrategy strategy(toy.bpe, toy.lm);
  const auto* file = testing::toy_corpus().in_split(Split::kTest).front();
  std::size_t checked = 0;
  for (std::size_t p = 1; p < file->text.size() && checked < 40; ++p) {
    const auto c = std::string_view(file->text).substr(0, p);
    if (c.back() != ' ' || !lm_anchor(c)) continue;
    LmSession session(strategy);
    const auto before = session.query(c, 50);
    const auto first = std::find_if(before.begin(), before.end(), [](const Candidate& x) {
      return is_ident_start(x.text.front());
    });
    if (first == before.end()) continue;
    const char a = first->text.front();
    std::vector<std::string> expected;
    for (const auto& cand : before) {
      if (cand.text.size() < 2 || cand.text.front() != a) continue;
      const auto rest = cand.text.substr(1);
      if (rest.find_first_not_of(" \t") == std::string::npos) continue;
      expected.push_back(rest);
    }
    const auto evals = session.evaluations();
    const auto after = session.query(std::string(c) + a, 50);
    CHECK(session.evaluations() == evals);
    CHECK(texts(after) == expected);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("a cold session equals a direct uncached search") {
  const auto& toy = toy_lm();
  const LmStrategy strategy(toy.bpe, toy.lm);
  const auto* file = testing::toy_corpus().in_split(Split::kSimulation).front();
  for (std::size_t p = 0; p < file->text.size(); p += 37) {
    const auto prefix = std::string_view(file->text).substr(0, p);
    LmSession session(strategy);
    CHECK(session.query(prefix, 5) == strategy.query(prefix, 5));
  }
}

TEST_CASE("caching never changes the candidates over a whole file") {
  const auto& toy = toy_lm();
  LmStrategyOptions off;
  off.use_cache = false;
  const LmStrategy cached(toy.bpe, toy.lm);
  const LmStrategy uncached(toy.bpe, toy.lm, off);
  const auto* file = testing::toy_corpus().in_split(Split::kTest).back();
  LmSession a(cached);
  LmSession b(uncached);
  for (std::size_t p = 0; p <= file->text.size(); ++p) {
    const auto prefix = std::string_view(file->text).substr(0, p);
    REQUIRE(a.query(prefix, 5) == b.query(prefix, 5));
  }
  CHECK(a.cache_hits() > 0);
  CHECK(b.cache_hits() == 0);
  CHECK(a.evaluations() < b.evaluations());
}

TEST_CASE("lm candidates respect the strategy contract") {
  const auto& toy = toy_lm();
  const LmStrategy strategy(toy.bpe, toy.lm);
  const auto* file = testing::toy_corpus().in_split(Split::kTest).front();
  std::size_t nonempty = 0;
  for (std::size_t p = 0; p < file->text.size(); p += 5) {
    const auto out = strategy.query(std::string_view(file->text).substr(0, p), 5);
    CHECK(out.size() <= 5);
    nonempty += !out.empty();
    for (const auto& c : out) {
      CHECK_FALSE(c.text.empty());
      CHECK(c.text.find('\n') == std::string::npos);
      CHECK(c.scores.at("lm_logprob") <= 0.0);
      CHECK(c.strategies == std::vector<std::string>{"lm"});
    }
  }
  CHECK(nonempty > 0);
}

TEST_CASE("memoized model returns the same distribution") {
  const auto& toy = toy_lm();
  const BpeNgramModel direct(toy.lm, toy.bpe);
  const MemoTokenModel memo(direct, toy.lm.order() - 1);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto h = random_history(rng, toy.lm);
    CHECK(memo.top_next(h, 5) == direct.top_next(h, 5));
    CHECK(memo.top_next(h, 5) == direct.top_next(h, 5));
  }
}
