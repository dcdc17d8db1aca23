#include "ie_fixture.h"

#include "test_data.h"

namespace onokg::testing {

namespace {

struct Splits {
  std::vector<ie::LabeledSentence> train, test;
};

const Splits& splits() {
  static const Splits s = [] {
    const auto lex = ie::NerLexicon::fromDataDir(dataDir());
    auto [train, test] = ie::splitCorpus(ie::syntheticCorpus(lex, 2000, 42), 0.8, 42);
    return Splits{std::move(train), std::move(test)};
  }();
  return s;
}

}  // namespace

const std::vector<ie::LabeledSentence>& nerTrainSplit() { return splits().train; }
const std::vector<ie::LabeledSentence>& nerTestSplit() { return splits().test; }

const ie::NerModel& trainedTagger() {
  static const ie::NerModel m = [] {
    const auto lex = ie::NerLexicon::fromDataDir(dataDir());
    ie::NerModel model(ie::SubwordVocab::load(dataPath("ner/demo_vocab.txt")), lex.gazetteer(), ie::TrainConfig{});
    model.train(nerTrainSplit());
    return model;
  }();
  return m;
}

}  // namespace onokg::testing
