#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "onokg/dl/expression.h"
#include "onokg/dl/reasoner.h"
#include "onokg/explain/attribution.h"
#include "onokg/explain/network.h"
#include "onokg/ie/tagger.h"
#include "onokg/ie/wordpiece.h"
#include "onokg/kg/ntriples.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/schema.h"
#include "onokg/ontology/seed.h"
#include "onokg/quality/quality.h"
#include "onokg/sparql/evaluator.h"
#include "onokg/sparql/query.h"

namespace {

using namespace onokg;

const std::string kData = ONOKG_BENCH_DATA_DIR;

// Built once per process; every benchmark reads it only.
const kg::Graph& seed() {
  static const kg::Graph g = ontology::buildSeedOntology(kData);
  return g;
}

void BM_SeedBuild(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ontology::buildSeedOntology(kData));
}
BENCHMARK(BM_SeedBuild)->Unit(benchmark::kMillisecond);

void BM_GraphMatchByPredicateObject(benchmark::State& state) {
  const auto& s = ontology::schema();
  for (auto _ : state) benchmark::DoNotOptimize(seed().match(std::nullopt, s.hasType, s.potsf));
}
BENCHMARK(BM_GraphMatchByPredicateObject);

void BM_NTriplesRoundTrip(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kg::parseNTriples(kg::serializeNTriples(seed())));
}
BENCHMARK(BM_NTriplesRoundTrip)->Unit(benchmark::kMillisecond);

void BM_SparqlJoin(benchmark::State& state) {
  const auto q = sparql::parseSelect(
      "PREFIX ono: <http://www.example.com/ontologies/ono/ono.owl#>\n"
      "SELECT ?b ?c WHERE { ?b ono:hasType ono:POTSF . ?b ono:causes ?c . ?c a ono:Cancer }");
  for (auto _ : state) benchmark::DoNotOptimize(sparql::evaluate(seed(), q));
}
BENCHMARK(BM_SparqlJoin);

void BM_DlInstances(benchmark::State& state) {
  const auto e = dl::parseDlx("Cancer and inverse causes some TP53", seed());
  for (auto _ : state) benchmark::DoNotOptimize(dl::instances(seed(), *e));
}
BENCHMARK(BM_DlInstances);

void BM_TaggerForwardBackward(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const auto head = ie::TaggerHead::init(ie::EntityType::Gene, 64, 32, 1);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d(0, 1);
  const Eigen::MatrixXd t = Eigen::MatrixXd::NullaryExpr(n, 32, [&] { return d(rng); });
  const std::vector<ie::Tag> gold(static_cast<std::size_t>(n), ie::Tag::O);
  for (auto _ : state) benchmark::DoNotOptimize(ie::sequenceGradient(head, t, gold));
}
BENCHMARK(BM_TaggerForwardBackward)->Arg(16)->Arg(128);

void BM_Wordpiece(benchmark::State& state) {
  const auto vocab = ie::SubwordVocab::load(kData + "/ner/demo_vocab.txt");
  for (auto _ : state) benchmark::DoNotOptimize(ie::wordpieceTokenize("medulloblastoma", vocab));
}
BENCHMARK(BM_Wordpiece);

void BM_Lrp(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto net = explain::FeedForwardNet::random({width, width, width, 2}, explain::Activation::Relu, 3, true);
  const Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(width));
  for (auto _ : state) benchmark::DoNotOptimize(explain::lrp(net, x, 0));
}
BENCHMARK(BM_Lrp)->Arg(32)->Arg(256);

void BM_Sensitivity(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const auto net = explain::FeedForwardNet::random({width, width, width, 2}, explain::Activation::Relu, 3, true);
  const Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(width));
  for (auto _ : state) benchmark::DoNotOptimize(explain::sensitivity(net, x, 0));
}
BENCHMARK(BM_Sensitivity)->Arg(32)->Arg(256);

void BM_QualityAssess(benchmark::State& state) {
  const auto cfg = quality::QualityConfig::load(kData + "/quality/config.json");
  for (auto _ : state) benchmark::DoNotOptimize(quality::assess(seed(), cfg));
}
BENCHMARK(BM_QualityAssess)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
