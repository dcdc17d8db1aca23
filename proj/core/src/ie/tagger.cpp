#include "onokg/ie/tagger.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include <spdlog/spdlog.h>

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/ie/corpus.h"

namespace onokg::ie {

namespace {

constexpr double kProbabilityFloor = 1e-12;

}  // namespace

void TrainConfig::validate() const {
  if (!(learningRate >= 0) || !std::isfinite(learningRate)) throw ValidationError("learning_rate", "must be a finite nonnegative number");
  if (epochs < 0) throw ValidationError("epochs", "must be nonnegative");
  if (maxSequenceLength < 3) throw ValidationError("max_sequence_length", "must be at least 3");
  if (!(dropout >= 0 && dropout < 1)) throw ValidationError("dropout", "must lie in [0, 1)");
  if (batchSize == 0) throw ValidationError("batch_size", "must be positive");
  if (hidden == 0) throw ValidationError("hidden", "must be positive");
  if (!std::isfinite(clipNorm)) throw ValidationError("clip_norm", "must be finite");
}

nlohmann::json TrainConfig::toJson() const {
  return {{"learning_rate", learningRate}, {"epochs", epochs},      {"max_sequence_length", maxSequenceLength},
          {"dropout", dropout},            {"batch_size", batchSize}, {"seed", seed},
          {"hidden", hidden},              {"clip_norm", clipNorm}};
}

TrainConfig TrainConfig::fromJson(const nlohmann::json& j) {
  TrainConfig c;
  c.learningRate = j.value("learning_rate", c.learningRate);
  c.epochs = j.value("epochs", c.epochs);
  c.maxSequenceLength = j.value("max_sequence_length", c.maxSequenceLength);
  c.dropout = j.value("dropout", c.dropout);
  c.batchSize = j.value("batch_size", c.batchSize);
  c.seed = j.value("seed", c.seed);
  c.hidden = j.value("hidden", c.hidden);
  c.clipNorm = j.value("clip_norm", c.clipNorm);
  c.validate();
  return c;
}

nlohmann::json referenceHyperparameters() {
  return nlohmann::json::array({
      {{"model", "biobert-cased"}, {"learning_rate", 3e-5}, {"epochs", 6}, {"max_sequence_length", 128}, {"dropout", 0.3}, {"batch_size", 16}},
      {{"model", "scibert-cased"}, {"learning_rate", 5e-5}, {"epochs", 6}, {"max_sequence_length", 128}, {"dropout", 0.3}, {"batch_size", 16}},
      {{"model", "bert-base-cased"}, {"learning_rate", 2e-5}, {"epochs", 5}, {"max_sequence_length", 128}, {"dropout", 0.4}, {"batch_size", 16}},
  });
}

int FeatureSpace::intern(const std::string& name) {
  auto [it, inserted] = index_.emplace(name, static_cast<int>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

int FeatureSpace::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::string wordShape(std::string_view word) {
  std::string out;
  for (char ch : word) {
    const auto c = static_cast<unsigned char>(ch);
    char k = std::isupper(c) ? 'X' : std::islower(c) ? 'x' : std::isdigit(c) ? 'd' : ch;
    if (out.empty() || out.back() != k) out += k;
  }
  return out;
}

std::vector<std::vector<std::string>> extractFeatures(const EncodedSentence& s, const Gazetteer& gazetteer) {
  const std::size_t nw = s.words.size();
  std::vector<std::string> lower(nw), shape(nw), gaz(nw);
  for (std::size_t w = 0; w < nw; ++w) {
    lower[w] = text::toLower(s.words[w]);
    shape[w] = wordShape(s.words[w]);
  }
  for (const auto& h : gazetteer.match(s.words)) {
    for (std::size_t w = h.span.begin; w < h.span.end; ++w) {
      if (!gaz[w].empty()) gaz[w] += '+';
      gaz[w] += std::string(entityTypeName(h.type)) + (w == h.span.begin ? ":B" : ":I");
    }
  }
  auto wordAt = [&](long w) { return w < 0 ? std::string("<s>") : w >= static_cast<long>(nw) ? std::string("</s>") : lower[static_cast<std::size_t>(w)]; };
  auto shapeAt = [&](long w) { return w < 0 || w >= static_cast<long>(nw) ? std::string("<b>") : shape[static_cast<std::size_t>(w)]; };
  auto gazAt = [&](long w) { return w < 0 || w >= static_cast<long>(nw) || gaz[static_cast<std::size_t>(w)].empty() ? std::string("-") : gaz[static_cast<std::size_t>(w)]; };

  std::vector<std::vector<std::string>> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto& f = out[i];
    f.push_back("bias");
    if (s.wordOf[i] < 0) {
      f.push_back("special=" + s.pieces[i]);
      continue;
    }
    const long w = s.wordOf[i];
    f.push_back("piece=" + s.pieces[i]);
    f.push_back(s.continuation[i] ? "cont" : "head");
    f.push_back("word=" + lower[static_cast<std::size_t>(w)]);
    f.push_back("shape=" + shape[static_cast<std::size_t>(w)]);
    f.push_back("pword=" + wordAt(w - 1));
    f.push_back("nword=" + wordAt(w + 1));
    f.push_back("pshape=" + shapeAt(w - 1));
    f.push_back("nshape=" + shapeAt(w + 1));
    f.push_back("gaz=" + gazAt(w));
    f.push_back("pgaz=" + gazAt(w - 1));
    f.push_back("ngaz=" + gazAt(w + 1));
    if (w == 0) f.push_back("first");
  }
  return out;
}

TaggerHead TaggerHead::init(EntityType type, std::size_t features, std::size_t hidden, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  TaggerHead h;
  h.type = type;
  const double se = 0.1, sw = 1.0 / std::sqrt(static_cast<double>(hidden));
  h.embeddings = Eigen::MatrixXd::NullaryExpr(static_cast<Eigen::Index>(features), static_cast<Eigen::Index>(hidden), [&] { return se * n(rng); });
  h.weights = Eigen::MatrixXd::NullaryExpr(kNumTags, static_cast<Eigen::Index>(hidden), [&] { return sw * n(rng); });
  h.bias = Eigen::VectorXd::Zero(kNumTags);
  return h;
}

Eigen::MatrixXd TaggerHead::represent(const std::vector<std::vector<int>>& featureIds) const {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(featureIds.size()), embeddings.cols());
  for (std::size_t i = 0; i < featureIds.size(); ++i) {
    for (int f : featureIds[i]) {
      if (f < 0 || f >= embeddings.rows()) throw DimensionError(static_cast<std::size_t>(embeddings.rows()), static_cast<std::size_t>(f), "feature id");
      t.row(static_cast<Eigen::Index>(i)) += embeddings.row(f);
    }
  }
  return t;
}

Eigen::MatrixXd tagProbabilities(const TaggerHead& head, const Eigen::MatrixXd& t) {
  if (t.cols() != head.weights.cols()) throw DimensionError(static_cast<std::size_t>(head.weights.cols()), static_cast<std::size_t>(t.cols()), "hidden width");
  if (head.bias.size() != head.weights.rows()) throw DimensionError(static_cast<std::size_t>(head.weights.rows()), static_cast<std::size_t>(head.bias.size()), "bias length");
  Eigen::MatrixXd z = t * head.weights.transpose();
  z.rowwise() += head.bias.transpose();
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    const double m = z.row(i).maxCoeff();
    z.row(i) = (z.row(i).array() - m).exp().matrix();
    z.row(i) /= z.row(i).sum();
  }
  return z;
}

namespace {

void checkGold(const Eigen::MatrixXd& t, const std::vector<Tag>& gold) {
  if (static_cast<std::size_t>(t.rows()) != gold.size()) throw DimensionError(static_cast<std::size_t>(t.rows()), gold.size(), "gold tag count");
  if (gold.empty()) throw ValidationError("sequence", "empty sequence");
}

}  // namespace

double sequenceLoss(const TaggerHead& head, const Eigen::MatrixXd& t, const std::vector<Tag>& gold) {
  checkGold(t, gold);
  const auto p = tagProbabilities(head, t);
  double sum = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    sum -= std::log(std::max(p(static_cast<Eigen::Index>(i), static_cast<int>(gold[i])), kProbabilityFloor));
  }
  return sum / static_cast<double>(gold.size());
}

HeadGradient sequenceGradient(const TaggerHead& head, const Eigen::MatrixXd& t, const std::vector<Tag>& gold) {
  checkGold(t, gold);
  Eigen::MatrixXd dz = tagProbabilities(head, t);
  for (std::size_t i = 0; i < gold.size(); ++i) dz(static_cast<Eigen::Index>(i), static_cast<int>(gold[i])) -= 1.0;
  dz /= static_cast<double>(gold.size());
  return {dz.transpose() * t, dz.colwise().sum().transpose(), dz * head.weights};
}

NerModel::NerModel(SubwordVocab vocab, Gazetteer gazetteer, TrainConfig config)
    : vocab_(std::move(vocab)), gazetteer_(std::move(gazetteer)), config_(config) {
  config_.validate();
}

const TaggerHead& NerModel::head(EntityType t) const {
  for (const auto& h : heads_) {
    if (h.type == t) return h;
  }
  throw ValidationError("model", "no tagger for type " + std::string(entityTypeName(t)));
}

std::vector<WordSpan> NerModel::chunk(const std::vector<std::string>& words) const {
  const std::size_t budget = config_.maxSequenceLength - 2;
  std::vector<std::size_t> cost(words.size());
  for (std::size_t w = 0; w < words.size(); ++w) cost[w] = std::min(wordpieceTokenize(words[w], vocab_).size(), budget);
  const auto hits = gazetteer_.match(words);
  std::vector<WordSpan> out;
  std::size_t start = 0;
  while (start < words.size()) {
    std::size_t end = start, used = 0;
    while (end < words.size() && used + cost[end] <= budget) used += cost[end++];
    if (end == words.size()) {
      out.push_back({start, end});
      break;
    }
    // Prefer a cut right after a stopword, then any cut outside a hit.
    std::size_t cut = 0;
    for (std::size_t c = end; c > start + 1 && !cut; --c) {
      if (isStopword(words[c - 1]) && !Gazetteer::splits(hits, c)) cut = c;
    }
    for (std::size_t c = end; c > start + 1 && !cut; --c) {
      if (!Gazetteer::splits(hits, c)) cut = c;
    }
    if (!cut) cut = std::max(end, start + 1);
    out.push_back({start, cut});
    start = cut;
  }
  return out;
}

EncodedSentence NerModel::encode(const std::vector<std::string>& words) const {
  return encodeWords(words, vocab_, config_.maxSequenceLength - 2);
}

std::vector<std::vector<int>> NerModel::featureIds(const EncodedSentence& s) const {
  std::vector<std::vector<int>> out;
  for (const auto& names : extractFeatures(s, gazetteer_)) {
    auto& ids = out.emplace_back();
    for (const auto& n : names) {
      int id = features_.find(n);
      if (id >= 0) ids.push_back(id);
    }
  }
  return out;
}

NerModel::Prediction NerModel::predict(EntityType type, const EncodedSentence& s) const {
  const auto& h = head(type);
  const auto p = tagProbabilities(h, h.represent(featureIds(s)));
  Prediction out;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    TagDistribution d{};
    for (int k = 0; k < kNumTags; ++k) d[static_cast<std::size_t>(k)] = p(i, k);
    Eigen::Index best = 0;
    p.row(i).maxCoeff(&best);
    out.tags.push_back(static_cast<Tag>(best));
    out.probabilities.push_back(d);
  }
  return out;
}

std::vector<EntityMention> NerModel::recognize(const Sentence& sentence, std::string_view text, std::string_view docId,
                                               std::size_t sentenceIndex) const {
  std::vector<std::string> words;
  for (const auto& t : sentence) words.push_back(t.form);
  std::vector<EntityMention> candidates;
  for (const auto& c : chunk(words)) {
    std::vector<std::string> part(words.begin() + static_cast<long>(c.begin), words.begin() + static_cast<long>(c.end));
    const auto enc = encode(part);
    for (const auto& h : heads_) {
      const auto pred = predict(h.type, enc);
      auto decoded = decodeSpans(enc, pred.tags);
      for (const auto& w : decoded.warnings) spdlog::warn("{} sentence {}: {}", docId, sentenceIndex, w);
      for (auto& m : decodeEntities(enc, pred.tags, pred.probabilities, h.type, docId, sentenceIndex)) {
        m.span.begin += c.begin;
        m.span.end += c.begin;
        candidates.push_back(std::move(m));
      }
    }
  }
  auto out = resolveTypes(std::move(candidates));
  for (auto& m : out) {
    const auto& first = sentence[m.span.begin];
    const auto& last = sentence[m.span.end - 1];
    if (!text.empty() && last.end <= text.size() && first.begin < last.end) {
      m.surface = std::string(text.substr(first.begin, last.end - first.begin));
    }
  }
  return out;
}

namespace {

struct Example {
  std::vector<std::vector<int>> features;
  std::vector<Tag> gold;
};

struct Adam {
  Eigen::MatrixXd mE, vE, mW, vW;
  Eigen::VectorXd mb, vb;
  long step = 0;

  explicit Adam(const TaggerHead& h)
      : mE(Eigen::MatrixXd::Zero(h.embeddings.rows(), h.embeddings.cols())),
        vE(mE),
        mW(Eigen::MatrixXd::Zero(h.weights.rows(), h.weights.cols())),
        vW(mW),
        mb(Eigen::VectorXd::Zero(h.bias.size())),
        vb(mb) {}

  template <class P, class G>
  static void update(P& param, P& m, P& v, const G& g, double lr, double c1, double c2) {
    constexpr double b1 = 0.9, b2 = 0.999, eps = 1e-8;
    m = b1 * m + (1 - b1) * g;
    v = b2 * v + (1 - b2) * g.cwiseProduct(g);
    param.array() -= lr * (m.array() / c1) / ((v.array() / c2).sqrt() + eps);
  }

  void apply(TaggerHead& h, const Eigen::MatrixXd& dE, const Eigen::MatrixXd& dW, const Eigen::VectorXd& db, double lr) {
    ++step;
    const double c1 = 1 - std::pow(0.9, static_cast<double>(step));
    const double c2 = 1 - std::pow(0.999, static_cast<double>(step));
    update(h.embeddings, mE, vE, dE, lr, c1, c2);
    update(h.weights, mW, vW, dW, lr, c1, c2);
    update(h.bias, mb, vb, db, lr, c1, c2);
  }
};

double corpusLoss(const TaggerHead& h, const std::vector<Example>& data) {
  if (data.empty()) return 0.0;
  double sum = 0;
  for (const auto& e : data) sum += sequenceLoss(h, h.represent(e.features), e.gold);
  return sum / static_cast<double>(data.size());
}

}  // namespace

TrainReport NerModel::train(const std::vector<LabeledSentence>& corpus) {
  config_.validate();
  // Encode every chunk once; the feature space grows from the training data.
  features_ = FeatureSpace{};
  struct Encoded {
    EncodedSentence enc;
    std::vector<std::vector<int>> features;
    std::vector<std::pair<WordSpan, EntityType>> spans;
  };
  std::vector<Encoded> encoded;
  for (const auto& ls : corpus) {
    std::vector<std::string> words;
    for (const auto& t : ls.tokens()) words.push_back(t.form);
    const auto gold = ls.wordSpans();
    for (const auto& c : chunk(words)) {
      Encoded e;
      e.enc = encode({words.begin() + static_cast<long>(c.begin), words.begin() + static_cast<long>(c.end)});
      for (const auto& names : extractFeatures(e.enc, gazetteer_)) {
        auto& ids = e.features.emplace_back();
        for (const auto& n : names) ids.push_back(features_.intern(n));
      }
      for (const auto& [sp, type] : gold) {
        if (sp.begin >= c.begin && sp.end <= c.end) e.spans.push_back({{sp.begin - c.begin, sp.end - c.begin}, type});
      }
      encoded.push_back(std::move(e));
    }
  }

  heads_.clear();
  lossCurves.clear();
  TrainReport report;
  report.sequences = encoded.size();
  std::uint64_t headSeed = config_.seed;
  for (auto type : {EntityType::Disease, EntityType::Gene}) {
    std::vector<Example> data;
    for (const auto& e : encoded) {
      std::vector<WordSpan> spans;
      for (const auto& [sp, t] : e.spans) {
        if (t == type) spans.push_back(sp);
      }
      data.push_back({e.features, encodeIob(e.enc, spans)});
    }
    TaggerHead h = TaggerHead::init(type, features_.size(), config_.hidden, headSeed++);
    Adam adam(h);
    std::mt19937_64 rng(config_.seed);
    std::bernoulli_distribution keep(1.0 - config_.dropout);
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> curve;
    for (int epoch = 0; epoch < config_.epochs; ++epoch) {
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t start = 0; start < order.size(); start += config_.batchSize) {
        const std::size_t stop = std::min(order.size(), start + config_.batchSize);
        const double scale = 1.0 / static_cast<double>(stop - start);
        Eigen::MatrixXd dE = Eigen::MatrixXd::Zero(h.embeddings.rows(), h.embeddings.cols());
        Eigen::MatrixXd dW = Eigen::MatrixXd::Zero(h.weights.rows(), h.weights.cols());
        Eigen::VectorXd db = Eigen::VectorXd::Zero(h.bias.size());
        for (std::size_t k = start; k < stop; ++k) {
          const auto& ex = data[order[k]];
          Eigen::MatrixXd t = h.represent(ex.features);
          Eigen::MatrixXd mask = Eigen::MatrixXd::Ones(t.rows(), t.cols());
          if (config_.dropout > 0) {
            for (Eigen::Index i = 0; i < mask.size(); ++i) mask(i) = keep(rng) ? 1.0 / (1.0 - config_.dropout) : 0.0;
            t = t.cwiseProduct(mask);
          }
          const auto g = sequenceGradient(h, t, ex.gold);
          dW += scale * g.weights;
          db += scale * g.bias;
          const Eigen::MatrixXd dT = g.input.cwiseProduct(mask);
          for (std::size_t i = 0; i < ex.features.size(); ++i) {
            for (int f : ex.features[i]) dE.row(f) += scale * dT.row(static_cast<Eigen::Index>(i));
          }
        }
        if (config_.clipNorm > 0) {
          const double norm = std::sqrt(dE.squaredNorm() + dW.squaredNorm() + db.squaredNorm());
          if (!std::isfinite(norm)) throw NumericError("non-finite gradient in epoch " + std::to_string(epoch + 1));
          if (norm > config_.clipNorm) {
            const double c = config_.clipNorm / norm;
            dE *= c;
            dW *= c;
            db *= c;
          }
        }
        adam.apply(h, dE, dW, db, config_.learningRate);
      }
      const double loss = corpusLoss(h, data);
      if (!std::isfinite(loss)) throw NumericError("non-finite loss in epoch " + std::to_string(epoch + 1));
      spdlog::info("tagger {} epoch {} loss {:.6f}", entityTypeName(type), epoch + 1, loss);
      curve.push_back(loss);
    }
    heads_.push_back(std::move(h));
    lossCurves.emplace_back(type, curve);
  }
  report.lossCurves = lossCurves;
  return report;
}

namespace {

nlohmann::json matrixJson(const Eigen::MatrixXd& m) {
  std::vector<double> flat(static_cast<std::size_t>(m.size()));
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(flat.data(), m.rows(), m.cols()) = m;
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", flat}};
}

Eigen::MatrixXd matrixFrom(const nlohmann::json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto flat = j.at("data").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(flat.size()) != rows * cols) throw DimensionError(static_cast<std::size_t>(rows * cols), flat.size(), "matrix data");
  return Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(flat.data(), rows, cols);
}

}  // namespace

nlohmann::json NerModel::toJson() const {
  nlohmann::json j;
  j["format"] = "onokg-ner-1";
  j["config"] = config_.toJson();
  j["reference_hyperparameters"] = referenceHyperparameters();
  j["vocab"] = std::vector<std::string>(vocab_.pieces().begin(), vocab_.pieces().end());
  auto gaz = nlohmann::json::array();
  for (const auto& [surface, type] : gazetteer_.entries()) gaz.push_back({surface, entityTypeName(type)});
  j["gazetteer"] = gaz;
  j["features"] = features_.names();
  auto heads = nlohmann::json::array();
  for (const auto& h : heads_) {
    std::vector<double> bias(h.bias.data(), h.bias.data() + h.bias.size());
    heads.push_back({{"type", entityTypeName(h.type)}, {"embeddings", matrixJson(h.embeddings)}, {"weights", matrixJson(h.weights)}, {"bias", bias}});
  }
  j["heads"] = heads;
  auto curves = nlohmann::json::object();
  for (const auto& [t, c] : lossCurves) curves[std::string(entityTypeName(t))] = c;
  j["loss_curves"] = curves;
  return j;
}

NerModel NerModel::fromJson(const nlohmann::json& j) {
  if (j.value("format", "") != "onokg-ner-1") throw ValidationError("checkpoint", "unknown checkpoint format");
  Gazetteer gaz;
  for (const auto& e : j.at("gazetteer")) {
    auto t = parseEntityType(e.at(1).get<std::string>());
    if (!t) throw ValidationError("checkpoint", "unknown entity type in gazetteer");
    gaz.add(e.at(0).get<std::string>(), *t);
  }
  NerModel m(SubwordVocab(j.at("vocab").get<std::vector<std::string>>()), std::move(gaz), TrainConfig::fromJson(j.at("config")));
  for (const auto& n : j.at("features")) m.features_.intern(n.get<std::string>());
  for (const auto& hj : j.at("heads")) {
    TaggerHead h;
    auto t = parseEntityType(hj.at("type").get<std::string>());
    if (!t) throw ValidationError("checkpoint", "unknown head type");
    h.type = *t;
    h.embeddings = matrixFrom(hj.at("embeddings"));
    h.weights = matrixFrom(hj.at("weights"));
    const auto bias = hj.at("bias").get<std::vector<double>>();
    h.bias = Eigen::Map<const Eigen::VectorXd>(bias.data(), static_cast<Eigen::Index>(bias.size()));
    if (static_cast<std::size_t>(h.embeddings.rows()) != m.features_.size()) throw DimensionError(m.features_.size(), static_cast<std::size_t>(h.embeddings.rows()), "embedding rows");
    if (h.weights.rows() != kNumTags) throw DimensionError(kNumTags, static_cast<std::size_t>(h.weights.rows()), "output rows");
    if (h.embeddings.cols() != h.weights.cols()) throw DimensionError(static_cast<std::size_t>(h.weights.cols()), static_cast<std::size_t>(h.embeddings.cols()), "hidden width");
    m.heads_.push_back(std::move(h));
  }
  if (j.contains("loss_curves")) {
    for (const auto& [k, v] : j.at("loss_curves").items()) {
      if (auto t = parseEntityType(k)) m.lossCurves.emplace_back(*t, v.get<std::vector<double>>());
    }
  }
  return m;
}

void NerModel::save(const std::string& path) const { text::writeFile(path, toJson().dump()); }

NerModel NerModel::load(const std::string& path) {
  const auto body = text::readFile(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path, std::string("malformed checkpoint: ") + e.what());
  }
  try {
    return fromJson(j);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path, std::string("malformed checkpoint: ") + e.what());
  }
}

NerScores evaluateNer(const NerModel& model, const std::vector<LabeledSentence>& corpus) {
  NerScores s;
  for (const auto& ls : corpus) {
    const auto tokens = ls.tokens();
    std::set<std::pair<WordSpan, EntityType>> gold;
    for (const auto& g : ls.wordSpans()) gold.insert(g);
    std::set<std::pair<WordSpan, EntityType>> pred;
    for (const auto& m : model.recognize(tokens)) pred.insert({m.span, m.type});
    s.gold += gold.size();
    s.predicted += pred.size();
    for (const auto& p : pred) s.truePositives += gold.count(p);
  }
  return s;
}

}  // namespace onokg::ie
