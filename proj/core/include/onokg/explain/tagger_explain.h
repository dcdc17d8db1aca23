#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onokg/explain/attribution.h"
#include "onokg/explain/network.h"
#include "onokg/ie/tagger.h"

namespace onokg::explain {

struct FeatureRelevance {
  std::string feature;
  int word = -1;  // word the feature reads, -1 for bias and specials
  double relevance = 0;
};

struct TaggerExplanation {
  std::vector<std::string> words;
  std::size_t word = 0;   // explained word
  std::size_t piece = 0;  // its head piece position in the encoding
  ie::EntityType type = ie::EntityType::Gene;
  ie::Tag tag = ie::Tag::O;
  double probability = 0;
  double logit = 0;
  Method method = Method::Lrp;
  double epsilon = 0, delta = 0;
  std::vector<FeatureRelevance> features;  // active features of the position
  std::vector<double> wordRelevance;       // summed per word
  double unattributed = 0;                 // bias and special features

  nlohmann::json toJson() const;
};

// The tag head at one position as a network over the indicator vector of its
// active features: x -> E_active^T x -> W . + b. The second layer alone is
// the head over the hidden representation.
FeedForwardNet positionNetwork(const ie::TaggerHead& head, const std::vector<int>& activeFeatures);

// Attribution of the logit of `tag` (the predicted tag when unset) at the
// head piece of `word`. Throws ValidationError for an out-of-range word.
TaggerExplanation explainTag(const ie::NerModel& model, ie::EntityType type, const std::vector<std::string>& words,
                             std::size_t word, Method method, std::optional<ie::Tag> tag = std::nullopt,
                             double eps = kDefaultEpsilon, double delta = kDefaultDelta);

// Word heatmap of a sentence: every word of every recognized mention has its
// predicted tag explained, and the per-word relevances are summed.
struct SentenceExplanation {
  std::vector<std::string> words;
  std::vector<ie::EntityMention> mentions;
  std::vector<double> scores;  // per word
  Method method = Method::Lrp;
  double epsilon = 0, delta = 0;
};

SentenceExplanation explainSentence(const ie::NerModel& model, const ie::Sentence& sentence, std::string_view text,
                                    Method method, double eps = kDefaultEpsilon, double delta = kDefaultDelta);

}  // namespace onokg::explain
