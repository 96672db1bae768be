#pragma once

#include "cce/bpe.hpp"
#include "cce/global_frequency.hpp"
#include "cce/lm_strategy.hpp"
#include "cce/local_frequency.hpp"
#include "cce/ngram_lm.hpp"
#include "test_support.hpp"

#include <memory>
#include <vector>

namespace cce::testing {

// The three built-in strategies trained on the toy corpus train split.
struct ToyStrategies {
  BpeModel bpe;
  NgramModel lm;
  std::unique_ptr<GlobalFrequencyStrategy> global;
  LocalFrequencyStrategy local;
  std::unique_ptr<LmStrategy> lm_strategy;
  std::vector<const Strategy*> all;

  ToyStrategies() {
    const auto train = toy_corpus().in_split(Split::kTrain);
    std::vector<std::string> texts;
    for (const auto* f : train) texts.push_back(f->text);
    bpe = BpeModel::train(texts, 1024);
    lm = NgramModel::train(lm_training_sequences(train, bpe), bpe.vocab_size());
    global = std::make_unique<GlobalFrequencyStrategy>(global_build(train, {}));
    lm_strategy = std::make_unique<LmStrategy>(bpe, lm);
    all = {global.get(), &local, lm_strategy.get()};
  }
};

inline const ToyStrategies& toy_strategies() {
  static const ToyStrategies s;
  return s;
}

}  // namespace cce::testing
