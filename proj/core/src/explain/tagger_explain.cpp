#include "onokg/explain/tagger_explain.h"

#include "onokg/common/error.h"

namespace onokg::explain {

FeedForwardNet positionNetwork(const ie::TaggerHead& head, const std::vector<int>& activeFeatures) {
  if (activeFeatures.empty()) throw ValidationError("features", "a position needs at least one active feature");
  DenseLayer embed;
  embed.weights.resize(static_cast<Eigen::Index>(head.hidden()), static_cast<Eigen::Index>(activeFeatures.size()));
  for (std::size_t k = 0; k < activeFeatures.size(); ++k) {
    embed.weights.col(static_cast<Eigen::Index>(k)) = head.embeddings.row(activeFeatures[k]).transpose();
  }
  embed.bias = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(head.hidden()));
  DenseLayer out{head.weights, head.bias, Activation::Identity};
  return FeedForwardNet({std::move(embed), std::move(out)});
}

namespace {

// Word read by a feature of a position over word w.
int featureWord(const std::string& name, int w, std::size_t words) {
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  int target = -1;
  if (starts("pword=") || starts("pshape=") || starts("pgaz=")) {
    target = w - 1;
  } else if (starts("nword=") || starts("nshape=") || starts("ngaz=")) {
    target = w + 1;
  } else if (name != "bias" && !starts("special=")) {
    target = w;
  }
  return target >= 0 && static_cast<std::size_t>(target) < words ? target : -1;
}

}  // namespace

TaggerExplanation explainTag(const ie::NerModel& model, ie::EntityType type, const std::vector<std::string>& words,
                             std::size_t word, Method method, std::optional<ie::Tag> tag, double eps, double delta) {
  if (word >= words.size()) throw ValidationError("word", "index " + std::to_string(word) + " is outside the sentence");
  const auto enc = model.encode(words);
  std::size_t piece = 0;
  while (piece < enc.size() && !(enc.wordOf[piece] == static_cast<int>(word) && !enc.continuation[piece])) ++piece;
  const auto ids = model.featureIds(enc);
  const auto& head = model.head(type);
  const auto pred = model.predict(type, enc);

  TaggerExplanation ex;
  ex.words = words;
  ex.word = word;
  ex.piece = piece;
  ex.type = type;
  ex.tag = tag.value_or(pred.tags[piece]);
  ex.probability = pred.probabilities[piece][static_cast<std::size_t>(ex.tag)];
  ex.method = method;
  ex.epsilon = method == Method::Lrp ? eps : 0.0;
  ex.delta = method == Method::Lrp ? delta : 0.0;
  const auto net = positionNetwork(head, ids[piece]);
  const Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(ids[piece].size()));
  const auto output = static_cast<std::size_t>(ex.tag);
  ex.logit = net.forward(x)(static_cast<Eigen::Index>(output));
  const Eigen::VectorXd r = attribute(method, net, x, output, eps, delta).scores;
  ex.wordRelevance.assign(words.size(), 0.0);
  for (std::size_t k = 0; k < ids[piece].size(); ++k) {
    FeatureRelevance fr;
    fr.feature = model.features().name(ids[piece][k]);
    fr.word = featureWord(fr.feature, static_cast<int>(word), words.size());
    fr.relevance = r(static_cast<Eigen::Index>(k));
    if (fr.word >= 0) {
      ex.wordRelevance[static_cast<std::size_t>(fr.word)] += fr.relevance;
    } else {
      ex.unattributed += fr.relevance;
    }
    ex.features.push_back(std::move(fr));
  }
  return ex;
}

nlohmann::json TaggerExplanation::toJson() const {
  auto feats = nlohmann::json::array();
  for (const auto& f : features) feats.push_back({{"feature", f.feature}, {"word", f.word}, {"relevance", f.relevance}});
  return {{"words", words},
          {"word", word},
          {"piece", piece},
          {"type", ie::entityTypeName(type)},
          {"tag", ie::tagName(tag)},
          {"probability", probability},
          {"logit", logit},
          {"method", methodName(method)},
          {"epsilon", epsilon},
          {"delta", delta},
          {"features", feats},
          {"word_relevance", wordRelevance},
          {"unattributed", unattributed}};
}

SentenceExplanation explainSentence(const ie::NerModel& model, const ie::Sentence& sentence, std::string_view text,
                                    Method method, double eps, double delta) {
  SentenceExplanation out;
  for (const auto& t : sentence) out.words.push_back(t.form);
  out.scores.assign(out.words.size(), 0.0);
  out.method = method;
  out.epsilon = method == Method::Lrp ? eps : 0.0;
  out.delta = method == Method::Lrp ? delta : 0.0;
  out.mentions = model.recognize(sentence, text);
  for (const auto& m : out.mentions) {
    for (std::size_t w = m.span.begin; w < m.span.end; ++w) {
      const auto ex = explainTag(model, m.type, out.words, w, method, w == m.span.begin ? ie::Tag::B : ie::Tag::I, eps, delta);
      for (std::size_t k = 0; k < out.scores.size(); ++k) out.scores[k] += ex.wordRelevance[k];
    }
  }
  return out;
}

}  // namespace onokg::explain
