#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <set>

#include "dl_oracle.h"
#include "onokg/dl/expression.h"
#include "onokg/dl/qa.h"
#include "onokg/dl/reasoner.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/schema.h"
#include "random_models.h"
#include "test_data.h"

namespace onokg {
namespace {

using dl::ClassExpression;
using dl::ExprKind;
using kg::Graph;
using kg::Term;
using ontology::ono;

std::set<Term> engine(const Graph& g, const ClassExpression& e) {
  auto v = dl::instances(g, e);
  return {v.begin(), v.end()};
}

std::set<std::string> names(const std::set<Term>& terms) {
  std::set<std::string> out;
  for (const auto& t : terms) out.insert(t.display());
  return out;
}

std::set<std::string> query(const std::string& text) {
  const Graph& g = testing::seedWithFixtures();
  return names(engine(g, *dl::parseDlx(text, g)));
}

TEST(DlxParser, RestrictionsBindInsideConjunctions) {
  const Graph& g = testing::seedGraph();
  auto e = dl::parseDlx("Biomarker and causes some BRCA and isA only POTSF", g);
  ASSERT_EQ(e->kind, ExprKind::And);
  ASSERT_EQ(e->operands.size(), 3u);
  EXPECT_EQ(e->operands[0]->kind, ExprKind::Atomic);
  EXPECT_EQ(e->operands[1]->kind, ExprKind::Some);
  EXPECT_EQ(e->operands[1]->filler->name, ono("BRCA"));
  EXPECT_EQ(e->operands[2]->kind, ExprKind::Only);
  EXPECT_EQ(e->operands[2]->role.property, ono("isA"));
}

TEST(DlxParser, AliasesMapToCanonicalProperties) {
  const Graph& g = testing::seedGraph();
  auto e = dl::parseDlx("Biomarker and haveCitations max 100", g);
  ASSERT_EQ(e->kind, ExprKind::And);
  EXPECT_EQ(e->operands[1]->kind, ExprKind::MaxCard);
  EXPECT_EQ(e->operands[1]->role.property, ono("hasCitations"));
  EXPECT_EQ(e->operands[1]->count, 100u);
  EXPECT_TRUE(dl::structurallyEqual(*dl::parseDlx("haveEvidence some PubMed", g),
                                    *dl::parseDlx("hasEvidence some PubMed", g)));
}

TEST(DlxParser, AndBindsTighterThanOr) {
  const Graph& g = testing::seedGraph();
  auto e = dl::parseDlx("Biomarker and (isA only POTSF or isA only ProteinCoding)", g);
  EXPECT_EQ(e->toString(), "(Biomarker and ((isA only POTSF) or (isA only ProteinCoding)))");
  auto f = dl::parseDlx("Biomarker and isA only POTSF or Cancer", g);
  EXPECT_EQ(f->toString(), "((Biomarker and (isA only POTSF)) or Cancer)");
}

TEST(DlxParser, KeywordsAreCaseInsensitive) {
  const Graph& g = testing::seedGraph();
  EXPECT_TRUE(dl::structurallyEqual(*dl::parseDlx("Biomarker AND causes SOME BRCA", g),
                                    *dl::parseDlx("Biomarker and causes some BRCA", g)));
}

TEST(DlxParser, DistinctDiagnostics) {
  const Graph& g = testing::seedGraph();
  try {
    dl::parseDlx("Biomarker and Unicorn", g);
    FAIL();
  } catch (const UnknownNameError& e) {
    EXPECT_EQ(e.kind(), "class");
  }
  try {
    dl::parseDlx("Biomarker and fliesTo some BRCA", g);
    FAIL();
  } catch (const UnknownNameError& e) {
    EXPECT_EQ(e.kind(), "property");
  }
  EXPECT_THROW(dl::parseDlx("Biomarker and hasCitations min -1", g), dl::CardinalityError);
  EXPECT_THROW(dl::parseDlx("Biomarker and hasCitations min x", g), dl::CardinalityError);
  EXPECT_THROW(dl::parseDlx("Biomarker and hasCitations max 2.5", g), dl::CardinalityError);
  EXPECT_THROW(dl::parseDlx("(Biomarker", g), SyntaxError);
  EXPECT_THROW(dl::parseDlx("", g), SyntaxError);
}

TEST(Reasoner, Tp53CancerTypes) { EXPECT_EQ(query("Cancer and inverse causes some TP53"), (std::set<std::string>{"BRCA", "MED", "OV", "PRAD"})); }

TEST(Reasoner, Erbb2CancerTypes) {
  EXPECT_EQ(query("Cancer and inverse causes some ERBB2"), (std::set<std::string>{"BLCA", "BRCA", "STAD", "UCEC"}));
}

TEST(Reasoner, PlantedFixtureAnswers) {
  EXPECT_EQ(query("Biomarker and causes some HNSC and causes some ESO and (hasSignificance some High or hasSignificance some Medium)"),
            (std::set<std::string>{"SOX2"}));
  EXPECT_EQ(query("Biomarker and causes some BLCA and causes some CARC and causes some CRC"), (std::set<std::string>{"FGFR3"}));
}

TEST(Reasoner, OnlyIsVacuousWithoutSuccessors) {
  Graph g;
  g.insert({testing::ex("x"), testing::ex("q"), testing::ex("y")});
  dl::Role r{testing::ex("p"), false};
  auto e = ClassExpression::only(r, ClassExpression::atomic(testing::ex("Nothing")));
  EXPECT_EQ(engine(g, *e), (std::set<Term>{testing::ex("x"), testing::ex("y")}));
}

TEST(Reasoner, EmptyGraphHasNoInstances) {
  Graph g;
  EXPECT_TRUE(engine(g, *ClassExpression::atomic(testing::ex("C"))).empty());
}

TEST(Reasoner, PackMatchesSetOracle) {
  const Graph& g = testing::seedWithFixtures();
  testing::DlSetOracle oracle(g);
  auto pack = testing::dlxPack();
  ASSERT_EQ(pack.size(), 17u);
  for (const auto& q : pack) {
    auto e = dl::parseDlx(q.expression, g);
    EXPECT_EQ(engine(g, *e), oracle.evaluate(*e)) << q.id << ": " << q.expression;
  }
}

TEST(Reasoner, RandomExpressionsMatchSetOracle) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::randomGraph(rng);
    testing::DlSetOracle oracle(g);
    auto e = testing::randomExpression(rng);
    ASSERT_EQ(engine(g, *e), oracle.evaluate(*e)) << "case " << i << ": " << e->toString();
  }
}

// Set laws, monotonicity and threshold identities on random graphs.
TEST(ReasonerProperties, SetLawsAndMonotonicity) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::randomGraph(rng);
    dl::AboxIndex idx(g);
    auto a = testing::randomExpression(rng, 2), b = testing::randomExpression(rng, 2);
    auto sa = idx.evaluate(*a), sb = idx.evaluate(*b);
    auto sand = idx.evaluate(*ClassExpression::conj({a, b}));
    auto sor = idx.evaluate(*ClassExpression::disj({a, b}));
    dl::IdSet inter, uni;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(uni));
    ASSERT_EQ(sand, inter);
    ASSERT_EQ(sor, uni);
    ASSERT_TRUE(std::includes(sa.begin(), sa.end(), sand.begin(), sand.end()));
    ASSERT_TRUE(std::includes(sor.begin(), sor.end(), sa.begin(), sa.end()));

    dl::Role r{testing::ex("p" + std::to_string(i % 4)), i % 3 == 0};
    ASSERT_EQ(idx.evaluate(*ClassExpression::min(r, 0)), idx.domain());
    std::uint64_t maxDegree = 0;
    for (auto x : idx.domain()) maxDegree = std::max<std::uint64_t>(maxDegree, idx.successors(x, r).size());
    ASSERT_EQ(idx.evaluate(*ClassExpression::max(r, maxDegree)), idx.domain());
  }
}

// On nodes with at least one successor, Only(p,C) excludes Some(p, not C).
TEST(ReasonerProperties, OnlySomeDuality) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    Graph g = testing::randomGraph(rng);
    dl::AboxIndex idx(g);
    dl::Role r{testing::ex("p1"), false};
    auto c = testing::randomExpression(rng, 1);
    auto sc = idx.evaluate(*c);
    auto only = idx.evaluate(*ClassExpression::only(r, c));
    for (auto x : only) {
      for (auto y : idx.successors(x, r)) ASSERT_TRUE(std::binary_search(sc.begin(), sc.end(), y));
    }
  }
}

TEST(SubclassClosure, SeedChainAndReflexivity) {
  auto c = dl::subclassClosure(testing::seedGraph());
  const auto& s = ontology::schema();
  EXPECT_TRUE(c.holds(s.cancer, s.disease));
  EXPECT_TRUE(c.holds(s.cancer, s.cancer));
  EXPECT_FALSE(c.holds(s.disease, s.cancer));
  Graph single;
  single.insert({testing::ex("C"), Term::iri(vocab::kRdfType), Term::iri(vocab::kOwlClass)});
  auto one = dl::subclassClosure(single);
  EXPECT_TRUE(one.holds(testing::ex("C"), testing::ex("C")));
  EXPECT_EQ(one.pairCount(), 1u);
}

// Reachability by boolean matrix powers on random DAGs.
TEST(SubclassClosure, MatchesMatrixReachability) {
  std::mt19937_64 rng(13);
  const Term sub = Term::iri(vocab::kRdfsSubClassOf);
  for (int round = 0; round < 50; ++round) {
    const int n = 8;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    Graph g;
    for (int i = 0; i < n; ++i) {
      reach[i][i] = true;
      g.insert({testing::ex("K" + std::to_string(i)), Term::iri(vocab::kRdfType), Term::iri(vocab::kOwlClass)});
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (std::bernoulli_distribution(0.25)(rng)) {
          g.insert({testing::ex("K" + std::to_string(i)), sub, testing::ex("K" + std::to_string(j))});
          reach[i][j] = true;
        }
      }
    }
    auto step = reach;
    for (int k = 0; k < n; ++k) {
      auto next = reach;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int m = 0; m < n; ++m) next[i][j] = next[i][j] || (reach[i][m] && step[m][j]);
      reach = next;
    }
    auto c = dl::subclassClosure(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ASSERT_EQ(c.holds(testing::ex("K" + std::to_string(i)), testing::ex("K" + std::to_string(j))), reach[i][j]);
  }
}

TEST(SubclassClosure, CycleIsReported) {
  Graph g;
  const Term sub = Term::iri(vocab::kRdfsSubClassOf);
  g.insert({testing::ex("A"), sub, testing::ex("B")});
  g.insert({testing::ex("B"), sub, testing::ex("A")});
  try {
    dl::subclassClosure(g);
    FAIL();
  } catch (const dl::HierarchyCycleError& e) {
    EXPECT_EQ(e.cycle().size(), 2u);
  }
}

TEST(Syllogism, OncogeneRuleDerivesTp53CausesCancer) {
  const Graph& g = testing::seedGraph();
  auto d = dl::deduceSyllogism(g, dl::oncogeneRule(), ono("TP53"));
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(d.derived->subject, ono("TP53"));
  EXPECT_EQ(d.derived->predicate, ono("causes"));
  EXPECT_EQ(d.derived->object, ono("Cancer"));
  ASSERT_EQ(d.trace.size(), 2u);
  EXPECT_TRUE(d.derivedProvenance);
  auto text = dl::formatTrace(d);
  EXPECT_NE(text.find("therefore: TP53 causes Cancer"), std::string::npos);
  auto again = dl::deduceSyllogism(g, dl::oncogeneRule(), ono("TP53"));
  EXPECT_EQ(again.derived, d.derived);
  EXPECT_EQ(again.trace, d.trace);
  EXPECT_FALSE(g.contains(*d.derived));
}

TEST(Syllogism, MissingMembershipGivesNoDerivation) {
  auto d = dl::deduceSyllogism(testing::seedGraph(), dl::oncogeneRule(), ono("BRCA"));
  EXPECT_FALSE(d.ok());
  EXPECT_TRUE(d.trace.empty());
}

TEST(Syllogism, PersistingAddsFlaggedStatementOnce) {
  Graph g = testing::seedGraph();
  auto d = dl::deduceSyllogism(g, dl::oncogeneRule(), ono("TP53"));
  const auto before = g.size();
  EXPECT_TRUE(dl::persistDerivation(g, d));
  EXPECT_TRUE(g.contains(*d.derived));
  EXPECT_GT(g.size(), before + 1);
  EXPECT_FALSE(dl::persistDerivation(g, d));
}

TEST(Qa, TemplatesMapQuestionsToQueries) {
  const Graph& g = testing::seedGraph();
  EXPECT_EQ(dl::questionToDlx(g, "Which cancer types caused by biomarker TP53?"), "Cancer and inverse causes some TP53");
  auto a = dl::answerQuestion(g, "Which cancer types caused by biomarker TP53?");
  EXPECT_EQ(names({a.answers.begin(), a.answers.end()}), (std::set<std::string>{"BRCA", "MED", "OV", "PRAD"}));
  auto b = dl::answerQuestion(g, "Which oncogenes are highly significant for breast cancer?");
  EXPECT_NE(b.expression.find("isA only Oncogene"), std::string::npos);
  EXPECT_NE(b.expression.find("causes some BRCA"), std::string::npos);
  EXPECT_THROW(dl::answerQuestion(g, "What is the weather today?"), ValidationError);
}

}  // namespace
}  // namespace onokg
