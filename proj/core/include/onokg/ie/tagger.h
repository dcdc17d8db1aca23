#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "onokg/ie/gazetteer.h"
#include "onokg/ie/iob.h"
#include "onokg/ie/preprocess.h"
#include "onokg/ie/wordpiece.h"

namespace onokg::ie {

struct TrainConfig {
  double learningRate = 0.05;
  int epochs = 10;
  std::size_t maxSequenceLength = 128;  // pieces including [CLS] and [SEP]
  double dropout = 0.0;                  // applied to the hidden representation
  std::size_t batchSize = 16;
  std::uint64_t seed = 42;
  std::size_t hidden = 48;
  double clipNorm = 5.0;  // global gradient norm; <= 0 disables clipping

  // Throws ValidationError naming the offending field.
  void validate() const;
  nlohmann::json toJson() const;
  static TrainConfig fromJson(const nlohmann::json& j);
};

// Hyperparameters of the reference transformer taggers this model stands in
// for; carried in checkpoints as metadata only.
nlohmann::json referenceHyperparameters();

// Interned feature names. Ids are dense and stable once assigned.
class FeatureSpace {
 public:
  int intern(const std::string& name);
  int find(const std::string& name) const;  // -1 when unknown
  const std::string& name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> names_;
};

// Active feature names per position: bias, piece, head/continuation, word,
// shape, neighbouring words and shapes, gazetteer membership.
std::vector<std::vector<std::string>> extractFeatures(const EncodedSentence& s, const Gazetteer& gazetteer);

// "TP53" -> "Xd", "Breast" -> "Xx", "cancer" -> "x"; runs collapse.
std::string wordShape(std::string_view word);

// One linear softmax head over summed feature embeddings:
//   T = sum of embedding rows of the active features   (N x H)
//   P = softmax(T W^T + b)                              (N x K)
struct TaggerHead {
  EntityType type = EntityType::Gene;
  Eigen::MatrixXd embeddings;  // F x H
  Eigen::MatrixXd weights;     // K x H
  Eigen::VectorXd bias;        // K

  std::size_t hidden() const { return static_cast<std::size_t>(weights.cols()); }

  // Random initialization from the seed.
  static TaggerHead init(EntityType type, std::size_t features, std::size_t hidden, std::uint64_t seed);

  Eigen::MatrixXd represent(const std::vector<std::vector<int>>& featureIds) const;
};

// Row-wise softmax of T W^T + b. Throws DimensionError when T has the wrong
// width. Rows sum to 1.
Eigen::MatrixXd tagProbabilities(const TaggerHead& head, const Eigen::MatrixXd& t);

// Mean negative log-probability of the gold tags over the N positions, with
// probabilities floored at 1e-12.
double sequenceLoss(const TaggerHead& head, const Eigen::MatrixXd& t, const std::vector<Tag>& gold);

struct HeadGradient {
  Eigen::MatrixXd weights;  // dL/dW
  Eigen::VectorXd bias;     // dL/db
  Eigen::MatrixXd input;    // dL/dT
};

// Analytic gradient of sequenceLoss (exact wherever no gold probability is
// below the floor).
HeadGradient sequenceGradient(const TaggerHead& head, const Eigen::MatrixXd& t, const std::vector<Tag>& gold);

struct LabeledSentence;  // corpus.h

struct TrainReport {
  std::vector<std::pair<EntityType, std::vector<double>>> lossCurves;  // full-corpus loss after each epoch
  std::size_t sequences = 0;
};

// Per-type taggers over a shared feature space.
class NerModel {
 public:
  NerModel() = default;
  NerModel(SubwordVocab vocab, Gazetteer gazetteer, TrainConfig config);

  const SubwordVocab& vocab() const { return vocab_; }
  const Gazetteer& gazetteer() const { return gazetteer_; }
  const TrainConfig& config() const { return config_; }
  const FeatureSpace& features() const { return features_; }
  const std::vector<TaggerHead>& heads() const { return heads_; }
  const TaggerHead& head(EntityType t) const;
  bool trained() const { return !heads_.empty(); }

  // Word ranges whose encodings fit maxSequenceLength. Cuts fall after the
  // last stopword that fits, never inside a gazetteer hit when avoidable.
  std::vector<WordSpan> chunk(const std::vector<std::string>& words) const;
  EncodedSentence encode(const std::vector<std::string>& words) const;
  // Known feature ids per position; unknown names are dropped.
  std::vector<std::vector<int>> featureIds(const EncodedSentence& s) const;

  struct Prediction {
    std::vector<Tag> tags;
    std::vector<TagDistribution> probabilities;
  };
  Prediction predict(EntityType type, const EncodedSentence& s) const;

  // Mentions of every type in one sentence, overlaps resolved. Surfaces are
  // cut from `text` when the tokens carry offsets into it.
  std::vector<EntityMention> recognize(const Sentence& sentence, std::string_view text = "",
                                       std::string_view docId = "", std::size_t sentenceIndex = 0) const;

  // Trains one head per type from scratch. Throws NumericError on a
  // non-finite loss.
  TrainReport train(const std::vector<LabeledSentence>& corpus);

  void save(const std::string& path) const;
  static NerModel load(const std::string& path);
  nlohmann::json toJson() const;
  static NerModel fromJson(const nlohmann::json& j);

  std::vector<std::pair<EntityType, std::vector<double>>> lossCurves;

 private:
  SubwordVocab vocab_;
  Gazetteer gazetteer_;
  TrainConfig config_;
  FeatureSpace features_;
  std::vector<TaggerHead> heads_;
};

struct NerScores {
  std::size_t truePositives = 0, predicted = 0, gold = 0;
  double precision() const { return predicted ? static_cast<double>(truePositives) / static_cast<double>(predicted) : 1.0; }
  double recall() const { return gold ? static_cast<double>(truePositives) / static_cast<double>(gold) : 1.0; }
  double f1() const {
    const double p = precision(), r = recall();
    return p + r > 0 ? 2 * p * r / (p + r) : 0.0;
  }
};

// Entity-level exact match: same sentence, word span and type.
NerScores evaluateNer(const NerModel& model, const std::vector<LabeledSentence>& corpus);

}  // namespace onokg::ie
