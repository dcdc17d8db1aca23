#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "ie_fixture.h"
#include "onokg/common/error.h"
#include "onokg/explain/attribution.h"
#include "onokg/explain/heatmap.h"
#include "onokg/explain/network.h"
#include "onokg/explain/tagger_explain.h"
#include "onokg/ie/preprocess.h"

namespace onokg {
namespace {

using namespace explain;

Eigen::VectorXd gaussian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d(0, 1);
  return Eigen::VectorXd::NullaryExpr(static_cast<Eigen::Index>(n), [&] { return d(rng); });
}

double outputOf(const FeedForwardNet& net, const Eigen::VectorXd& x, std::size_t c) {
  return net.forward(x)(static_cast<Eigen::Index>(c));
}

// ---- LRP -----------------------------------------------------------------

TEST(Lrp, BiasFreeReluNetsConserveAtEveryLayer) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> width(1, 10);
  for (int n = 0; n < 500; ++n) {
    const std::vector<std::size_t> sizes = {width(rng), width(rng), width(rng)};
    const auto net = FeedForwardNet::random(sizes, Activation::Relu, rng(), false);
    const auto x = gaussian(rng, sizes[0]);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(0, sizes[2] - 1)(rng);
    const double f = outputOf(net, x, c);
    try {
      const auto layers = lrpLayers(net, x, c, 0.0, 1.0);
      ASSERT_EQ(layers.size(), 3u);
      for (const auto& r : layers) EXPECT_NEAR(r.sum(), f, 1e-6) << "case " << n;
    } catch (const NumericError&) {
      // Only a zero pre-activation may stop the propagation.
      bool zero = false;
      const auto t = net.trace(x);
      for (const auto& z : t.preActivations) zero = zero || (z.array() == 0.0).any();
      EXPECT_TRUE(zero) << "case " << n;
    }
  }
}

TEST(Lrp, BiasShareConservesOnRandomNetworksWithBiasesAndStabilizer) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::size_t> depth(1, 4), width(1, 8);
  const double eps[] = {0.0, 1e-6, 0.01, 1.0};
  for (int n = 0; n < 500; ++n) {
    std::vector<std::size_t> sizes;
    for (auto d = depth(rng) + 1; d > 0; --d) sizes.push_back(width(rng));
    const auto net = FeedForwardNet::random(sizes, Activation::Relu, rng(), true);
    const auto x = gaussian(rng, sizes.front());
    const std::size_t c = std::uniform_int_distribution<std::size_t>(0, sizes.back() - 1)(rng);
    const double f = outputOf(net, x, c);
    for (const auto& r : lrpLayers(net, x, c, eps[n % 4], 1.0)) EXPECT_NEAR(r.sum(), f, 1e-6 * std::max(1.0, std::abs(f)));
  }
}

TEST(Lrp, ProportionalRedistributionOnOneLinearNeuron) {
  DenseLayer L{Eigen::MatrixXd::Ones(1, 2), Eigen::VectorXd::Zero(1), Activation::Identity};
  FeedForwardNet net({L});
  const auto m = lrp(net, Eigen::Vector2d(1, 2), 0, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(m.scores(0), 1.0);
  EXPECT_DOUBLE_EQ(m.scores(1), 2.0);
  EXPECT_DOUBLE_EQ(m.total, 3.0);
  EXPECT_EQ(m.method, Method::Lrp);
}

TEST(Lrp, HandComputedTwoLayerExampleWithBiasShare) {
  // z1 = [1 1; 1 -1] x + [0; 1], relu; y = [1 1] a. At x = (2, 1): a1 = (3, 2),
  // y = 5. Unit 1 splits 3 as (2, 1); unit 2 splits 2 as
  // ((2 + 1/2) / 2 * 2, (-1 + 1/2) / 2 * 2) = (2.5, -0.5).
  DenseLayer l1{Eigen::MatrixXd(2, 2), Eigen::VectorXd(2), Activation::Relu};
  l1.weights << 1, 1, 1, -1;
  l1.bias << 0, 1;
  DenseLayer l2{Eigen::MatrixXd(1, 2), Eigen::VectorXd::Zero(1), Activation::Identity};
  l2.weights << 1, 1;
  FeedForwardNet net({l1, l2});
  const auto m = lrp(net, Eigen::Vector2d(2, 1), 0, 0.0, 1.0);
  EXPECT_NEAR(m.scores(0), 4.5, 1e-12);
  EXPECT_NEAR(m.scores(1), 0.5, 1e-12);
}

TEST(Lrp, LinearInTheOutputRelevance) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 100; ++n) {
    const auto net = FeedForwardNet::random({4, 5, 3}, Activation::Relu, rng(), true);
    const auto x = gaussian(rng, 4);
    const double f = outputOf(net, x, 1);
    const auto once = lrp(net, x, 1, 0.01, 1.0);
    const auto twice = lrp(net, x, 1, 0.01, 1.0, 2 * f);
    for (Eigen::Index i = 0; i < once.scores.size(); ++i) EXPECT_NEAR(twice.scores(i), 2 * once.scores(i), 1e-12 * std::max(1.0, std::abs(f)));
  }
}

TEST(Lrp, ParameterAndSingularityErrors) {
  const auto net = FeedForwardNet::random({3, 2}, Activation::Identity, 1);
  EXPECT_THROW(lrp(net, Eigen::VectorXd::Ones(3), 0, -0.1), ValidationError);
  DenseLayer dead{Eigen::MatrixXd::Zero(1, 2), Eigen::VectorXd::Zero(1), Activation::Identity};
  FeedForwardNet zero({dead});
  try {
    lrp(zero, Eigen::VectorXd::Ones(2), 0, 0.0);
    ADD_FAILURE() << "expected a singular denominator";
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("unit 0"), std::string::npos);
  }
  const auto ok = lrp(zero, Eigen::VectorXd::Ones(2), 0, 0.01);
  EXPECT_TRUE(ok.scores.allFinite());
  EXPECT_THROW(lrp(net, Eigen::VectorXd::Ones(3), 2), DimensionError);
}

// ---- sensitivity ---------------------------------------------------------

TEST(Sensitivity, LinearMapGivesSquaredWeights) {
  DenseLayer L{Eigen::MatrixXd(1, 2), Eigen::VectorXd::Zero(1), Activation::Identity};
  L.weights << 2, -1;
  FeedForwardNet net({L});
  std::mt19937_64 rng(1);
  for (int n = 0; n < 10; ++n) {
    const auto m = sensitivity(net, gaussian(rng, 2), 0);
    EXPECT_DOUBLE_EQ(m.scores(0), 4.0);
    EXPECT_DOUBLE_EQ(m.scores(1), 1.0);
    EXPECT_DOUBLE_EQ(m.total, 5.0);
  }
}

TEST(Sensitivity, ConstantNetworkGivesZero) {
  DenseLayer a{Eigen::MatrixXd::Zero(3, 4), Eigen::VectorXd::Ones(3), Activation::Relu};
  DenseLayer b{Eigen::MatrixXd::Zero(2, 3), Eigen::VectorXd::Ones(2), Activation::Identity};
  FeedForwardNet net({a, b});
  const auto m = sensitivity(net, Eigen::VectorXd::Ones(4), 1);
  EXPECT_EQ(m.scores, Eigen::VectorXd::Zero(4));
}

TEST(Sensitivity, MatchesFiniteDifferencesAwayFromKinks) {
  std::mt19937_64 rng(8);
  constexpr double h = 1e-6;
  int checked = 0;
  while (checked < 500) {
    const auto net = FeedForwardNet::random({5, 6, 3}, Activation::Relu, rng(), true);
    const auto x = gaussian(rng, 5);
    const auto t = net.trace(x);
    if ((t.preActivations[0].array().abs() < 1e-3).any()) continue;
    const std::size_t c = static_cast<std::size_t>(checked % 3);
    const auto g = net.gradient(x, c);
    const auto m = sensitivity(net, x, c);
    EXPECT_NEAR(m.total, g.squaredNorm(), 1e-8);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      EXPECT_GE(m.scores(i), 0.0);
      Eigen::VectorXd up = x, down = x;
      up(i) += h;
      down(i) -= h;
      const double fd = (outputOf(net, up, c) - outputOf(net, down, c)) / (2 * h);
      EXPECT_NEAR(m.scores(i), fd * fd, 1e-4 * std::max(1.0, fd * fd));
    }
    ++checked;
  }
}

TEST(Network, ShapeErrors) {
  DenseLayer a{Eigen::MatrixXd::Ones(3, 2), Eigen::VectorXd::Zero(3), Activation::Relu};
  DenseLayer b{Eigen::MatrixXd::Ones(1, 4), Eigen::VectorXd::Zero(1), Activation::Identity};
  EXPECT_THROW(FeedForwardNet({a, b}), DimensionError);
  const auto net = FeedForwardNet::random({2, 3, 1}, Activation::Relu, 3);
  EXPECT_THROW(net.forward(Eigen::VectorXd::Ones(3)), DimensionError);
  EXPECT_THROW(net.gradient(Eigen::VectorXd::Ones(2), 1), DimensionError);
  Eigen::VectorXd inf = Eigen::VectorXd::Ones(2);
  inf(0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(net.forward(inf), NumericError);
}

// ---- heatmaps ------------------------------------------------------------

TEST(Heatmap, NormalizationEdgeCases) {
  const auto zero = makeHeatmap({"a", "b"}, {0.0, 0.0});
  EXPECT_EQ(zero.intensity, (std::vector<double>{0.0, 0.0}));
  const auto single = makeHeatmap({"a", "b", "c"}, {0.0, -3.0, 0.0});
  EXPECT_EQ(single.intensity, (std::vector<double>{0.0, 1.0, 0.0}));
  const auto empty = makeHeatmap({}, {});
  EXPECT_TRUE(empty.tokens.empty());
  EXPECT_THROW(makeHeatmap({"a"}, {}), DimensionError);
}

TEST(Heatmap, RenderersEmbedRawScoresAndEscape) {
  const auto h = makeHeatmap({"TP53", "<b>", "cancer"}, {2.0, -1.0, 0.0});
  const auto term = renderTerminal(h);
  EXPECT_NE(term.find("TP53"), std::string::npos);
  EXPECT_NE(term.find("# scores: 2 -1 0"), std::string::npos);
  EXPECT_NE(term.find('\x1b'), std::string::npos);
  EXPECT_EQ(renderTerminal(h, false), "TP53 <b> cancer\n# scores: 2 -1 0\n");
  const auto html = renderHtml(h, "x & y");
  EXPECT_NE(html.find("&lt;b&gt;"), std::string::npos);
  EXPECT_NE(html.find("x &amp; y"), std::string::npos);
  EXPECT_NE(html.find("data-score=\"-1\""), std::string::npos);
  EXPECT_EQ(html.find("<b>"), std::string::npos);
  const auto j = relevanceJson(h, Method::Lrp, 0.01, 1.0);
  EXPECT_EQ(j["tokens"].size(), 3u);
  EXPECT_EQ(j["method"], "lrp");
  EXPECT_DOUBLE_EQ(j["epsilon"].get<double>(), 0.01);
}

// ---- tagger explanations -------------------------------------------------

TEST(TaggerExplanation, LrpConservesTheLogitAcrossWordsAndBias) {
  const auto& m = testing::trainedTagger();
  const std::vector<std::string> words = {"TP53", "is", "responsible", "for", "a", "disease", "called", "Breast", "Cancer", "."};
  const auto ex = explainTag(m, ie::EntityType::Gene, words, 0, Method::Lrp, std::nullopt, 0.0, 1.0);
  EXPECT_EQ(ex.tag, ie::Tag::B);
  EXPECT_GT(ex.probability, 0.5);
  double total = ex.unattributed;
  for (double r : ex.wordRelevance) total += r;
  EXPECT_NEAR(total, ex.logit, 1e-6 * std::max(1.0, std::abs(ex.logit)));
  const auto j = ex.toJson();
  EXPECT_EQ(j["tag"], "B");
  EXPECT_EQ(j["method"], "lrp");
  EXPECT_EQ(j["word_relevance"].size(), words.size());
}

TEST(TaggerExplanation, SensitivityIsSquaredLogitGradient) {
  const auto& m = testing::trainedTagger();
  const std::vector<std::string> words = {"Breast", "Cancer", "is", "common", "."};
  const auto ex = explainTag(m, ie::EntityType::Disease, words, 1, Method::Sensitivity, ie::Tag::I);
  const auto& head = m.head(ie::EntityType::Disease);
  const auto ids = m.featureIds(m.encode(words))[ex.piece];
  ASSERT_EQ(ids.size(), ex.features.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const double g = head.weights.row(static_cast<int>(ie::Tag::I)).dot(head.embeddings.row(ids[k]));
    EXPECT_NEAR(ex.features[k].relevance, g * g, 1e-9 * std::max(1.0, g * g));
  }
  EXPECT_THROW(explainTag(m, ie::EntityType::Disease, words, 9, Method::Lrp), ValidationError);
}

TEST(TaggerExplanation, SampleHeatmapRanksEntityWordsFirst) {
  const auto doc = ie::preprocess(testing::kSampleText, "sample");
  const auto ex = explainSentence(testing::trainedTagger(), doc.sentences[0], doc.text, Method::Lrp);
  const auto h = makeHeatmap(ex.words, ex.scores);
  std::vector<std::size_t> order(h.tokens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return h.intensity[a] > h.intensity[b]; });
  const std::set<std::string> top = {h.tokens[order[0]], h.tokens[order[1]], h.tokens[order[2]]};
  EXPECT_EQ(top, (std::set<std::string>{"TP53", "Breast", "Cancer"}));
}

}  // namespace
}  // namespace onokg
