#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"
#include "onokg/sparql/evaluator.h"
#include "onokg/sparql/query.h"
#include "random_models.h"
#include "sparql_oracle.h"
#include "test_data.h"

namespace onokg {
namespace {

using kg::Graph;
using kg::Term;
using sparql::QueryError;
using sparql::QueryErrorKind;

std::vector<testing::OracleRow> engineRows(const Graph& g, const sparql::SelectQuery& q) {
  return testing::sortedRows(sparql::evaluate(g, q).rows);
}

std::set<std::string> firstColumn(const sparql::SolutionTable& t) {
  std::set<std::string> out;
  for (const auto& r : t.rows) out.insert(r[0] ? r[0]->lexical() : "");
  return out;
}

QueryErrorKind errorKind(const std::string& text) {
  try {
    sparql::parseSelect(text);
  } catch (const QueryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return QueryErrorKind::Syntax;
}

TEST(SparqlParser, MinimalQuery) {
  auto q = sparql::parseSelect("SELECT ?x WHERE { ?x <a:p> <a:o> . }");
  EXPECT_EQ(q.projection, std::vector<std::string>{"x"});
  ASSERT_EQ(q.where.triples.size(), 1u);
  EXPECT_FALSE(q.distinct);
  EXPECT_EQ(q.where.triples[0].predicate.term.lexical(), "a:p");
}

TEST(SparqlParser, BreastCancerPackQueryShape) {
  auto q = sparql::parseSelect(text::readFile(testing::dataPath("queries/q1_brca_high_pubmed.rq")));
  EXPECT_EQ(q.projection, std::vector<std::string>{"labelBiomarker"});
  EXPECT_GE(q.where.triples.size(), 3u);
  EXPECT_EQ(q.where.filters.size(), 1u);
  EXPECT_EQ(q.groupBy, std::vector<std::string>{"labelBiomarker"});
}

TEST(SparqlParser, SemicolonCommaAndA) {
  auto q = sparql::parseSelect(
      "PREFIX ex: <http://example.org/>\n"
      "SELECT DISTINCT * WHERE { ?s a ex:C ; ex:p ?o1, ?o2 . }");
  ASSERT_EQ(q.where.triples.size(), 3u);
  EXPECT_EQ(q.where.triples[0].predicate.term.lexical(), std::string(vocab::kRdfType));
  EXPECT_TRUE(q.distinct);
  EXPECT_EQ(q.projection, (std::vector<std::string>{"s", "o1", "o2"}));
}

TEST(SparqlParser, DistinctDiagnostics) {
  EXPECT_EQ(errorKind("SELECT ?x WHERE { ?x ex:p ?y }"), QueryErrorKind::UnknownPrefix);
  EXPECT_EQ(errorKind("SELECT ?z WHERE { ?x <a:p> ?y }"), QueryErrorKind::UnboundVariable);
  EXPECT_EQ(errorKind("SELECT ?x WHERE { ?x <a:p> ?y FILTER(?y >= ) }"), QueryErrorKind::MalformedFilter);
  EXPECT_EQ(errorKind("SELECT ?x WHERE { ?x <a:p> ?y FILTER(regex(?y, \"[unclosed\")) }"), QueryErrorKind::MalformedFilter);
  EXPECT_EQ(errorKind("SELECT ?x WHERE { ?x <a:p> ?y } GROUP BY ?y"), QueryErrorKind::UnboundVariable);
  EXPECT_EQ(errorKind("SELECT ?x WHERE { ?x <a:p> ?y OPTIONAL { ?y <a:q> ?z } }"), QueryErrorKind::Unsupported);
  EXPECT_EQ(errorKind("SELECT ?x WHERE { ?x <a:p> ?y "), QueryErrorKind::Syntax);
}

TEST(SparqlParser, ErrorsCarryPosition) {
  try {
    sparql::parseSelect("SELECT ?x WHERE {\n  ?x <a:p> ?y .\n  ?x nope:q ?y\n}");
    FAIL();
  } catch (const QueryError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(SparqlEval, EmptyGraphGivesEmptyTable) {
  Graph g;
  auto t = sparql::evaluate(g, sparql::parseSelect("SELECT ?x WHERE { ?x <a:p> ?y }"));
  EXPECT_EQ(t.header, std::vector<std::string>{"x"});
  EXPECT_TRUE(t.rows.empty());
}

TEST(SparqlEval, ComparisonBoundaryIsInclusive) {
  Graph g;
  g.insert({testing::ex("a"), testing::ex("n"), Term::integer(100)});
  g.insert({testing::ex("b"), testing::ex("n"), Term::integer(99)});
  auto t = sparql::evaluate(g, sparql::parseSelect(
                                   "PREFIX ex: <http://example.org/> SELECT ?s WHERE { ?s ex:n ?n FILTER(?n >= 100) }"));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(*t.rows[0][0], testing::ex("a"));
}

TEST(SparqlEval, RegexOnIriFailsTheRowSilently) {
  Graph g;
  g.insert({testing::ex("a"), testing::ex("p"), testing::ex("b")});
  g.insert({testing::ex("a"), testing::ex("p"), Term::literal("bee")});
  auto t = sparql::evaluate(
      g, sparql::parseSelect("PREFIX ex: <http://example.org/> SELECT ?o WHERE { ?s ex:p ?o FILTER(regex(?o, \"b\")) }"));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][0]->lexical(), "bee");
}

TEST(SparqlEval, ValuesWithUndefAndAbsentTerms) {
  Graph g;
  g.insert({testing::ex("a"), testing::ex("p"), testing::ex("b")});
  auto t = sparql::evaluate(g, sparql::parseSelect("PREFIX ex: <http://example.org/>\n"
                                                   "SELECT ?s ?k WHERE { ?s ex:p ?o VALUES (?s ?k) { (UNDEF ex:k1) (ex:zz ex:k2) } }"));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(*t.rows[0][1], testing::ex("k1"));
}

TEST(SparqlEval, ExportFormats) {
  Graph g;
  g.insert({testing::ex("a"), Term::iri(vocab::kRdfsLabel), Term::literal("x, \"y\"")});
  auto t = sparql::evaluate(g, sparql::parseSelect(
                                   "PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#> SELECT ?s ?l WHERE { ?s rdfs:label ?l }"));
  EXPECT_EQ(t.toCsv(), "s,l\nhttp://example.org/a,\"x, \"\"y\"\"\"\n");
  auto j = nlohmann::json::parse(t.toJson());
  EXPECT_EQ(j["header"], nlohmann::json({"s", "l"}));
  EXPECT_EQ(j["rows"][0][0], "http://example.org/a");
  EXPECT_NE(t.toText().find("(1 row)"), std::string::npos);
}

TEST(QueryPack, ExpectedAnswersOnSeedWithFixtures) {
  const Graph& g = testing::seedWithFixtures();
  auto pack = sparql::runQueryPack(g, testing::dataPath("queries"));
  ASSERT_EQ(pack.size(), 5u);
  EXPECT_EQ(firstColumn(pack[0].table), (std::set<std::string>{"BRCA1", "ERBB2", "PIK3CA", "TP53"}));
  EXPECT_EQ(firstColumn(pack[1].table), (std::set<std::string>{"FGFR3"}));
  EXPECT_EQ(firstColumn(pack[3].table), (std::set<std::string>{"SOX2"}));
  EXPECT_EQ(firstColumn(pack[4].table), (std::set<std::string>{"AKT1", "ERBB2", "MYC", "PIK3CA"}));
}

TEST(QueryPack, MatchesBindingEnumerator) {
  const Graph& g = testing::seedWithFixtures();
  for (const auto& r : sparql::runQueryPack(g, testing::dataPath("queries"))) {
    auto q = sparql::parseSelect(text::readFile(r.path));
    EXPECT_EQ(testing::sortedRows(r.table.rows), testing::enumerateBindings(g, q)) << r.id;
  }
}

TEST(QueryPack, EmptyGraphGivesFiveEmptyTables) {
  Graph g;
  auto pack = sparql::runQueryPack(g, testing::dataPath("queries"));
  ASSERT_EQ(pack.size(), 5u);
  for (const auto& r : pack) EXPECT_TRUE(r.table.rows.empty()) << r.id;
}

TEST(QueryPack, SeedAnswersAreFlaggedFixtureFree) {
  auto pack = sparql::runQueryPack(testing::seedGraph(), testing::dataPath("queries"));
  EXPECT_TRUE(pack[1].table.rows.empty());
  EXPECT_TRUE(pack[3].table.rows.empty());
}

TEST(SparqlEval, RandomQueriesMatchBindingEnumerator) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::randomGraph(rng);
    auto text = testing::randomQuery(rng);
    auto q = sparql::parseSelect(text);
    ASSERT_EQ(engineRows(g, q), testing::enumerateBindings(g, q)) << "case " << i << ":\n" << text;
  }
}

TEST(SparqlProperties, DistinctIdempotentFilterMonotonePatternsCommute) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::randomGraph(rng);
    auto q = sparql::parseSelect(testing::randomQuery(rng));
    auto base = sparql::evaluate(g, q);

    auto d1 = q;
    d1.distinct = true;
    auto once = sparql::evaluate(g, d1);
    std::set<std::vector<std::optional<Term>>> unique(once.rows.begin(), once.rows.end());
    ASSERT_EQ(unique.size(), once.rows.size());
    ASSERT_EQ(sparql::evaluate(g, d1).rows, once.rows);

    auto narrowed = q;
    sparql::FilterExpr extra;
    extra.op = sparql::FilterOp::Const;
    extra.constant = Term::typedLiteral(i % 2 ? "true" : "false", vocab::kXsdBoolean);
    narrowed.where.filters.push_back(extra);
    ASSERT_LE(sparql::evaluate(g, narrowed).rows.size(), base.rows.size());

    auto permuted = q;
    std::shuffle(permuted.where.triples.begin(), permuted.where.triples.end(), rng);
    ASSERT_EQ(testing::sortedRows(sparql::evaluate(g, permuted).rows), testing::sortedRows(base.rows));
  }
}

}  // namespace
}  // namespace onokg
