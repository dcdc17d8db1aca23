#include <gtest/gtest.h>

#include <random>

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/kg/ntriples.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/schema.h"
#include "onokg/quality/quality.h"
#include "test_data.h"

namespace onokg {
namespace {

using kg::Term;
using namespace quality;

const std::string kKg = "http://example.org/kg/";

kg::Graph loadFixture(const std::string& name) {
  kg::Graph g;
  kg::loadNTriplesFile(testing::dataPath("fixtures/quality/" + name), g);
  return g;
}

QualityConfig plantedConfig() { return QualityConfig::load(testing::dataPath("fixtures/quality/planted.json")); }

void expectRatio(const QualityReport& r, const std::string& name, std::size_t num, std::size_t den) {
  const auto& m = r.at(name);
  EXPECT_EQ(m.status, MetricStatus::Ok) << name;
  EXPECT_EQ(m.kind, MetricKind::Ratio) << name;
  EXPECT_EQ(m.numerator, num) << name;
  EXPECT_EQ(m.denominator, den) << name;
  ASSERT_TRUE(m.ratio) << name;
  EXPECT_EQ(*m.ratio, static_cast<double>(num) / static_cast<double>(den)) << name;
  EXPECT_FALSE(m.vacuous) << name;
}

void expectCount(const QualityReport& r, const std::string& name, std::size_t count) {
  const auto& m = r.at(name);
  EXPECT_EQ(m.status, MetricStatus::Ok) << name;
  EXPECT_EQ(m.kind, MetricKind::Count) << name;
  EXPECT_EQ(m.numerator, count) << name;
  EXPECT_FALSE(m.ratio) << name;
}

// Hand counts over planted.nt. Subjects s1..s10; s8 and s9 share one
// description; s3 cites -5; s8, s9 and s10 carry no label.
TEST(Quality, PlantedDefectFixtureMatchesHandCounts) {
  const auto r = assess(loadFixture("planted.nt"), plantedConfig());
  ASSERT_EQ(r.metrics.size(), 13u);
  expectRatio(r, "schema_completeness", 4, 5);        // kg:Drug absent
  expectRatio(r, "interlinking_completeness", 1, 4);  // only s1 links out
  expectRatio(r, "property_completeness", 3, 4);      // s4 lacks hasCitations
  expectRatio(r, "numeric_range_violations", 1, 3);   // -5 of {10, 0, -5}
  expectRatio(r, "extensional_conciseness", 9, 10);
  expectCount(r, "external_sameas_links", 1);         // s5 sameAs s4 is internal
  EXPECT_EQ(r.at("external_sameas_links").denominator, 2u);
  expectRatio(r, "datatype_compatibility", 5, 7);     // "maybe" and Feb 29 2021
  expectRatio(r, "dereferenceable_uris", 21, 23);     // ext:g1, ext:d6 not allowlisted
  expectRatio(r, "dereferenceable_back_links", 5, 22);
  expectRatio(r, "dereferenceable_forward_links", 10, 10);
  expectCount(r, "coverage_detail", 9);
  expectCount(r, "coverage_scope", 10);
  expectRatio(r, "labeled_resources", 7, 10);
  EXPECT_EQ(r.at("numeric_range_violations").sample.size(), 1u);
  EXPECT_EQ(r.at("labeled_resources").sample.size(), 3u);
}

TEST(Quality, AllowlistCoveringThreeOfFourNamespaces) {
  QualityConfig cfg;
  cfg.allowlist = {"http://a.example/", "http://b.example/", "http://c.example/"};
  const auto r = assess(loadFixture("namespaces.nt"), cfg);
  expectRatio(r, "dereferenceable_uris", 6, 8);  // A:3 B:1 C:2 accepted, D:2 rejected
  cfg.resolver = ResolverMode::Syntactic;
  expectRatio(assess(loadFixture("namespaces.nt"), cfg), "dereferenceable_uris", 8, 8);
}

TEST(Quality, ResolverModes) {
  QualityConfig cfg;
  cfg.allowlist = {std::string(vocab::kOno)};
  EXPECT_TRUE(resolveUri(cfg, std::string(vocab::kOno) + "TP53"));
  EXPECT_FALSE(resolveUri(cfg, "http://elsewhere.example/TP53"));
  cfg.allowlist.clear();
  const auto r = assess(testing::seedGraph(), cfg);
  EXPECT_EQ(r.at("dereferenceable_uris").numerator, 0u);
  EXPECT_EQ(*r.at("dereferenceable_uris").ratio, 0.0);
  cfg.resolver = ResolverMode::Syntactic;
  EXPECT_TRUE(resolveUri(cfg, "urn:x:y"));
  EXPECT_FALSE(resolveUri(cfg, "not an iri"));
  EXPECT_THROW(parseResolverMode("telepathy"), ValidationError);
}

TEST(Quality, EmptyGraphAndVacuousRatios) {
  QualityConfig cfg;
  cfg.goldClasses = {kKg + "Gene"};
  cfg.homeNamespaces = {kKg};
  const auto r = assess(kg::Graph{}, cfg);
  expectRatio(r, "schema_completeness", 0, 1);
  expectCount(r, "coverage_detail", 0);
  const auto& labeled = r.at("labeled_resources");
  EXPECT_TRUE(labeled.vacuous);
  EXPECT_EQ(*labeled.ratio, 1.0);
  EXPECT_EQ(labeled.denominator, 0u);
}

TEST(Quality, UnconfiguredMetricsAreSkippedNotFatal) {
  const auto r = assess(loadFixture("planted.nt"), QualityConfig{});
  for (auto name : {"schema_completeness", "interlinking_completeness", "property_completeness",
                    "numeric_range_violations", "external_sameas_links", "dereferenceable_back_links",
                    "dereferenceable_forward_links"}) {
    EXPECT_EQ(r.at(name).status, MetricStatus::Skipped) << name;
    EXPECT_FALSE(r.at(name).note.empty()) << name;
  }
  EXPECT_EQ(r.at("extensional_conciseness").status, MetricStatus::Ok);
  EXPECT_EQ(r.toJson()["metrics"][0]["status"], "skipped");
  EXPECT_NE(r.toTable().find("skipped"), std::string::npos);
}

TEST(Quality, SeedWithOntologyGoldStandardIsSchemaComplete) {
  const auto cfg = QualityConfig::load(testing::dataPath("quality/config.json"));
  const auto r = assess(testing::seedGraph(), cfg);
  expectRatio(r, "schema_completeness", cfg.goldClasses.size() + cfg.goldProperties.size(),
              cfg.goldClasses.size() + cfg.goldProperties.size());
  // Set comparison against the schema itself.
  const auto& s = ontology::schema();
  std::size_t gold = s.classes().size() + s.objectProperties().size() + s.datatypeProperties().size();
  EXPECT_EQ(r.at("schema_completeness").denominator, gold);
  EXPECT_EQ(r.at("numeric_range_violations").numerator, 0u);
  for (const auto& m : r.metrics) {
    if (!m.ratio) continue;
    EXPECT_LE(m.numerator, m.denominator) << m.name;
    EXPECT_GE(*m.ratio, 0.0) << m.name;
    EXPECT_LE(*m.ratio, 1.0) << m.name;
  }
}

TEST(Quality, ConfigValidation) {
  QualityConfig cfg;
  cfg.ranges = {{kKg + "p", 2, 1}};
  EXPECT_THROW(cfg.validate(), ValidationError);
  EXPECT_THROW(assess(kg::Graph{}, cfg), ValidationError);
  cfg.ranges = {{kKg + "p", 1, 1}};
  EXPECT_NO_THROW(cfg.validate());
  cfg.completenessClass = kKg + "Gene";
  EXPECT_THROW(cfg.validate(), ValidationError);
  EXPECT_THROW(QualityConfig::fromJson(nlohmann::json::parse(R"({"numeric_ranges":[{"predicate":"ono:x","lower":5,"upper":-5}]})")),
               ValidationError);
  EXPECT_THROW(QualityConfig::fromJson(nlohmann::json::parse(R"({"resolver":{"mode":"carrier-pigeon"}})")), ValidationError);
  EXPECT_THROW(QualityConfig::fromJson(nlohmann::json::parse(R"({"gold_standard":{"classes":["nope:X"]}})")), UnknownNameError);
  const auto round = QualityConfig::fromJson(plantedConfig().toJson());
  EXPECT_EQ(round.toJson(), plantedConfig().toJson());
}

TEST(Quality, DatatypeValidators) {
  const std::string xsd(vocab::kXsd);
  struct Case {
    const char* lexical;
    const char* type;
    bool valid;
  };
  const Case cases[] = {
      {"42", "integer", true},     {"-0", "integer", true},        {"+7", "integer", true},
      {"4.2", "integer", false},   {"", "integer", false},         {" 1", "integer", false},
      {"1.", "decimal", true},     {".5", "decimal", true},        {"-3.25", "decimal", true},
      {"1e3", "decimal", false},   {".", "decimal", false},        {"true", "boolean", true},
      {"0", "boolean", true},      {"TRUE", "boolean", false},     {"yes", "boolean", false},
      {"2024-02-29", "date", true}, {"1900-02-29", "date", false}, {"2000-02-29", "date", true},
      {"2023-04-31", "date", false}, {"2023-13-01", "date", false}, {"2023-01-01Z", "date", true},
      {"2023-01-01+05:30", "date", true}, {"2023-1-01", "date", false}, {"0000-01-01", "date", false},
  };
  for (const auto& c : cases) {
    const auto v = lexicalFormValid(c.lexical, xsd + c.type);
    ASSERT_TRUE(v) << c.type;
    EXPECT_EQ(*v, c.valid) << c.lexical << " as " << c.type;
  }
  EXPECT_FALSE(lexicalFormValid("abc", xsd + "string"));
}

// Random small graphs over a handful of subjects, predicates and objects.
kg::Graph randomGraph(std::mt19937_64& rng) {
  kg::Graph g;
  std::uniform_int_distribution<int> n(0, 30), pick(0, 5);
  const int count = n(rng);
  for (int i = 0; i < count; ++i) {
    const Term s = Term::iri(kKg + "s" + std::to_string(pick(rng)));
    const int p = pick(rng);
    const Term pred = p == 0 ? Term::iri(vocab::kRdfsLabel) : Term::iri(kKg + "p" + std::to_string(p));
    const Term o = p == 0 ? Term::literal("l" + std::to_string(pick(rng))) : Term::iri(kKg + "o" + std::to_string(pick(rng)));
    g.insert({s, pred, o});
  }
  return g;
}

TEST(QualityProperties, RatiosBoundedAndDeterministic) {
  std::mt19937_64 rng(42);
  auto cfg = plantedConfig();
  for (int i = 0; i < 200; ++i) {
    const auto g = randomGraph(rng);
    const auto a = assess(g, cfg), b = assess(g, cfg);
    EXPECT_EQ(a.toJson(), b.toJson());
    for (const auto& m : a.metrics) {
      EXPECT_LE(m.sample.size(), MetricResult::kMaxSample);
      if (!m.ratio) continue;
      EXPECT_LE(m.numerator, m.denominator);
      EXPECT_GE(*m.ratio, 0.0);
      EXPECT_LE(*m.ratio, 1.0);
      EXPECT_EQ(m.vacuous, m.denominator == 0);
    }
  }
}

TEST(QualityProperties, AddingALabelNeverLowersLabeledResources) {
  std::mt19937_64 rng(7);
  const auto cfg = plantedConfig();
  for (int i = 0; i < 200; ++i) {
    auto g = randomGraph(rng);
    const double before = *assess(g, cfg).at("labeled_resources").ratio;
    const int s = std::uniform_int_distribution<int>(0, 7)(rng);
    g.insert({Term::iri(kKg + "s" + std::to_string(s)), Term::iri(vocab::kRdfsLabel), Term::literal("new")});
    EXPECT_GE(*assess(g, cfg).at("labeled_resources").ratio, before);
  }
}

TEST(QualityProperties, AddingADuplicateNeverRaisesConciseness) {
  std::mt19937_64 rng(9);
  const auto cfg = plantedConfig();
  for (int i = 0; i < 200; ++i) {
    auto g = randomGraph(rng);
    if (g.empty()) continue;
    const auto before = assess(g, cfg).at("extensional_conciseness");
    const auto source = g.all().front().subject;
    const Term copy = Term::iri(kKg + "copy" + std::to_string(i));
    for (const auto& t : g.match(source, std::nullopt, std::nullopt)) g.insert({copy, t.predicate, t.object});
    const auto after = assess(g, cfg).at("extensional_conciseness");
    EXPECT_LE(*after.ratio, *before.ratio);
    EXPECT_EQ(after.numerator, before.numerator);
    EXPECT_EQ(after.denominator, before.denominator + 1);
  }
}

TEST(QualityProperties, SampleIsCappedAtOneHundred) {
  kg::Graph g;
  for (int i = 0; i < 250; ++i) g.insert({Term::iri(kKg + "u" + std::to_string(i)), Term::iri(kKg + "p"), Term::literal("v")});
  const auto& m = assess(g, QualityConfig{}).at("labeled_resources");
  EXPECT_EQ(m.numerator, 0u);
  EXPECT_EQ(m.denominator, 250u);
  EXPECT_EQ(m.sample.size(), 100u);
  const auto& c = assess(g, QualityConfig{}).at("extensional_conciseness");
  EXPECT_EQ(c.numerator, 1u);
  EXPECT_EQ(c.sample.size(), 100u);
}

}  // namespace
}  // namespace onokg
