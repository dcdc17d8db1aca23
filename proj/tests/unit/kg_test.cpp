#include <gtest/gtest.h>

#include <random>

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/kg/graph.h"
#include "onokg/kg/ntriples.h"
#include "onokg/kg/prefixes.h"
#include "onokg/kg/vocab.h"
#include "random_models.h"
#include "test_data.h"

namespace onokg {
namespace {

using kg::Graph;
using kg::Term;
using kg::Triple;
using testing::ex;

TEST(Term, RejectsRelativeIri) { EXPECT_THROW(Term::iri("relative/path"), ValidationError); }

TEST(Term, NumericValueOnlyForNumericLiterals) {
  EXPECT_EQ(Term::integer(42).numericValue(), 42.0);
  EXPECT_FALSE(Term::literal("42").numericValue().has_value());
  EXPECT_FALSE(ex("x").numericValue().has_value());
}

TEST(Graph, InsertIsIdempotent) {
  Graph g;
  Triple t{ex("a"), ex("p"), ex("b")};
  EXPECT_TRUE(g.insert(t));
  EXPECT_FALSE(g.insert(t));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.contains(t));
  EXPECT_TRUE(g.remove(t));
  EXPECT_FALSE(g.remove(t));
  EXPECT_TRUE(g.empty());
}

TEST(Graph, RejectsLiteralSubjectAndNonIriPredicate) {
  Graph g;
  EXPECT_THROW(g.insert({Term::literal("x"), ex("p"), ex("b")}), ValidationError);
  EXPECT_THROW(g.insert({ex("a"), Term::blank("p"), ex("b")}), ValidationError);
  EXPECT_TRUE(g.empty());
}

TEST(Graph, IdsAreDenseFromOne) {
  Graph g;
  g.insert({ex("a"), ex("p"), ex("b")});
  EXPECT_EQ(g.lookup(ex("a"))->value, 1u);
  EXPECT_EQ(g.lookup(ex("p"))->value, 2u);
  EXPECT_EQ(g.lookup(ex("b"))->value, 3u);
  EXPECT_FALSE(g.lookup(ex("zzz")).has_value());
}

// Every bound/unbound combination of match() agrees with a linear scan.
TEST(Graph, MatchEqualsLinearScan) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    Graph g = testing::randomGraph(rng, 150);
    const auto all = g.all();
    for (int probe = 0; probe < 20 && !all.empty(); ++probe) {
      const Triple& ref = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      for (int mask = 0; mask < 8; ++mask) {
        std::optional<Term> s, p, o;
        if (mask & 1) s = ref.subject;
        if (mask & 2) p = ref.predicate;
        if (mask & 4) o = ref.object;
        std::vector<Triple> expected;
        for (const auto& t : all) {
          if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o)) expected.push_back(t);
        }
        auto got = g.match(s, p, o);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, expected) << "mask " << mask;
      }
    }
  }
}

TEST(Graph, IndexesStayCoherentUnderChurn) {
  std::mt19937_64 rng(11);
  Graph g = testing::randomGraph(rng, 200);
  auto all = g.all();
  for (std::size_t i = 0; i < all.size(); i += 2) g.remove(all[i]);
  EXPECT_TRUE(g.indexesCoherent());
  EXPECT_EQ(g.size(), all.size() / 2);
  Graph copy = g;
  EXPECT_TRUE(sameTriples(copy, g));
  EXPECT_TRUE(copy.indexesCoherent());
}

TEST(Graph, FreshBlankAvoidsUsedLabels) {
  Graph g;
  g.insert({Term::blank("b"), ex("p"), ex("o")});
  Term fresh = g.freshBlank("b");
  EXPECT_TRUE(fresh.isBlank());
  EXPECT_NE(fresh.lexical(), "b");
}

TEST(NTriples, ParsesLiteralsAndEscapes) {
  std::vector<kg::NTriplesError> errors;
  Graph g = kg::parseNTriples(
      "<http://e.org/a> <http://e.org/p> \"say \\\"hi\\\"\\n\" .\n"
      "<http://e.org/a> <http://e.org/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      "<http://e.org/a> <http://e.org/p> \"chat\"@fr .\n"
      "# comment line\n"
      "_:x <http://e.org/p> <http://e.org/b> .\n",
      &errors);
  EXPECT_TRUE(errors.empty());
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.contains({Term::iri("http://e.org/a"), Term::iri("http://e.org/p"), Term::literal("say \"hi\"\n")}));
  EXPECT_TRUE(g.contains({Term::iri("http://e.org/a"), Term::iri("http://e.org/p"), Term::langLiteral("chat", "fr")}));
}

TEST(NTriples, ReportsMalformedLinesAndContinues) {
  Graph g;
  auto r = kg::parseNTriples(
      "<http://e.org/a> <http://e.org/p> \"open .\n"
      "<rel> <http://e.org/p> <http://e.org/b> .\n"
      "<http://e.org/a> <http://e.org/p> <http://e.org/b>\n"
      "<http://e.org/a> <http://e.org/p> <http://e.org/c> .\n",
      g);
  ASSERT_EQ(r.errors.size(), 3u);
  EXPECT_EQ(r.errors[0].line, 1u);
  EXPECT_EQ(r.errors[0].kind, kg::NTriplesErrorKind::UnterminatedLiteral);
  EXPECT_EQ(r.errors[1].kind, kg::NTriplesErrorKind::RelativeIri);
  EXPECT_EQ(r.errors[2].kind, kg::NTriplesErrorKind::MissingTerminator);
  EXPECT_EQ(g.size(), 1u);
}

TEST(NTriples, BlankLabelsAreScopedPerDocument) {
  Graph g;
  kg::parseNTriples("_:x <http://e.org/p> <http://e.org/a> .\n", g);
  kg::parseNTriples("_:x <http://e.org/p> <http://e.org/b> .\n", g);
  auto subjects = g.match(std::nullopt, Term::iri("http://e.org/p"), std::nullopt);
  ASSERT_EQ(subjects.size(), 2u);
  EXPECT_NE(subjects[0].subject, subjects[1].subject);
}

TEST(NTriples, EmptyGraphSerializesToEmptyString) { EXPECT_EQ(kg::serializeNTriples(Graph{}), ""); }

TEST(NTriples, SeedRoundTripIsIdentity) {
  const Graph& seed = testing::seedGraph();
  std::vector<kg::NTriplesError> errors;
  Graph back = kg::parseNTriples(kg::serializeNTriples(seed), &errors);
  EXPECT_TRUE(errors.empty());
  EXPECT_TRUE(sameTriples(seed, back));
  auto lines = [](const std::string& text) {
    auto v = text::split(text, '\n');
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_TRUE(lines(kg::serializeNTriples(back)) == lines(kg::serializeNTriples(seed)));
}

TEST(NTriples, RandomGraphRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Graph g = testing::randomGraph(rng);
    Graph back = kg::parseNTriples(kg::serializeNTriples(g));
    ASSERT_TRUE(sameTriples(g, back));
  }
}

TEST(Prefixes, ExpandAndCompact) {
  auto p = kg::PrefixTable::standard();
  EXPECT_EQ(p.expand("ono:TP53").lexical(), std::string(vocab::kOno) + "TP53");
  EXPECT_EQ(p.compact(std::string(vocab::kRdfs) + "label"), "rdfs:label");
  EXPECT_EQ(p.compact("http://unknown.org/x"), "<http://unknown.org/x>");
  EXPECT_THROW(p.expand("nope:x"), UnknownNameError);
  EXPECT_THROW(p.expand("noColon"), SyntaxError);
}

}  // namespace
}  // namespace onokg
