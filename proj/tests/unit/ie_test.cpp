#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <regex>
#include <set>

#include "ie_fixture.h"
#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/ie/corpus.h"
#include "onokg/ie/iob.h"
#include "onokg/ie/linking.h"
#include "onokg/ie/pipeline.h"
#include "onokg/ie/preprocess.h"
#include "onokg/ie/relations.h"
#include "onokg/ie/tagger.h"
#include "onokg/ie/wordpiece.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/schema.h"
#include "test_data.h"

namespace onokg {
namespace {

using namespace ie;
using kg::Term;
using ontology::ono;

const SubwordVocab& demoVocab() {
  static const SubwordVocab v = SubwordVocab::load(testing::dataPath("ner/demo_vocab.txt"));
  return v;
}

Linker demoLinker(const kg::Graph& g) { return Linker(g, AliasTable::load(testing::dataPath("aliases.csv"))); }

// ---- preprocessing -------------------------------------------------------

TEST(Preprocess, SplitsSampleIntoTwoSentencesWithFaithfulOffsets) {
  const auto doc = preprocess(testing::kSampleText, "sample");
  ASSERT_EQ(doc.sentences.size(), 2u);
  for (const auto& s : doc.sentences) {
    for (const auto& t : s) EXPECT_EQ(doc.text.substr(t.begin, t.end - t.begin), t.form);
  }
  EXPECT_EQ(doc.sentences[0].front().form, "TP53");
  EXPECT_EQ(doc.sentences[1].front().form, "TP53");
}

TEST(Preprocess, ConllHasOneLinePerTokenAndBlankSeparators) {
  const auto doc = preprocess(testing::kSampleText);
  const auto lines = text::split(doc.conll(), '\n');
  std::size_t tokens = 0, blanks = 0;
  for (const auto& l : lines) {
    if (l.empty()) {
      ++blanks;
    } else {
      ++tokens;
      EXPECT_EQ(text::split(l, '\t').size(), 5u) << l;
    }
  }
  std::size_t expected = 0;
  for (const auto& s : doc.sentences) expected += s.size();
  EXPECT_EQ(tokens, expected);
  EXPECT_GE(blanks, doc.sentences.size());
}

TEST(Preprocess, DeterministicAndStopwordsFlagged) {
  const auto a = preprocess(testing::kSampleText);
  const auto b = preprocess(testing::kSampleText);
  EXPECT_EQ(a.conll(), b.conll());
  EXPECT_TRUE(isStopword("is"));
  EXPECT_TRUE(isStopword("the"));
  EXPECT_FALSE(isStopword("cancer"));
  EXPECT_EQ(normalizeSurface("Breast Cancers"), normalizeSurface("breast cancer"));
}

// ---- subword segmentation ------------------------------------------------

TEST(WordPiece, SegmentsSyndromes) {
  EXPECT_EQ(wordpieceTokenize("syndromes", demoVocab()), (std::vector<std::string>{"s", "##yn", "##dr", "##om", "##es"}));
}

TEST(WordPiece, UnmatchableWordIsUnknown) {
  EXPECT_EQ(wordpieceTokenize("caf\xc3\xa9", demoVocab()), (std::vector<std::string>{"[UNK]"}));
}

TEST(WordPiece, JoinInvertsSegmentationOverTheAlphabet) {
  const std::string alpha = demoVocab().alphabet();
  ASSERT_FALSE(alpha.empty());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> len(1, 14), ch(0, alpha.size() - 1);
  for (int n = 0; n < 1000; ++n) {
    std::string w;
    for (auto k = len(rng); k > 0; --k) w += alpha[ch(rng)];
    const auto pieces = wordpieceTokenize(w, demoVocab());
    ASSERT_NE(pieces.front(), "[UNK]") << w;
    EXPECT_EQ(joinPieces(pieces), text::toLower(w)) << w;
    for (std::size_t i = 0; i < pieces.size(); ++i) EXPECT_EQ(pieces[i].rfind("##", 0) == 0, i > 0) << w;
  }
}

// ---- IOB -----------------------------------------------------------------

struct RandomLayout {
  EncodedSentence enc;
  std::vector<WordSpan> spans;
};

RandomLayout randomLayout(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nWords(1, 12), nPieces(1, 3), coin(0, 2), spanLen(1, 3);
  RandomLayout r;
  const int words = nWords(rng);
  r.enc.pieces.push_back("[CLS]");
  r.enc.wordOf.push_back(-1);
  r.enc.continuation.push_back(false);
  for (int w = 0; w < words; ++w) {
    r.enc.words.push_back("w" + std::to_string(w));
    const int p = nPieces(rng);
    for (int k = 0; k < p; ++k) {
      r.enc.pieces.push_back(k ? "##p" : "p");
      r.enc.wordOf.push_back(w);
      r.enc.continuation.push_back(k > 0);
    }
  }
  r.enc.pieces.push_back("[SEP]");
  r.enc.wordOf.push_back(-1);
  r.enc.continuation.push_back(false);
  std::size_t w = 0;
  while (w < static_cast<std::size_t>(words)) {
    if (coin(rng) == 0) {
      const auto e = std::min<std::size_t>(static_cast<std::size_t>(words), w + static_cast<std::size_t>(spanLen(rng)));
      r.spans.push_back({w, e});
      w = e;
    } else {
      ++w;
    }
  }
  return r;
}

TEST(Iob, EncodeDecodeRoundTripOverRandomLayouts) {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 1000; ++n) {
    const auto r = randomLayout(rng);
    const auto tags = encodeIob(r.enc, r.spans);
    ASSERT_EQ(tags.size(), r.enc.size());
    EXPECT_EQ(tags.front(), Tag::Cls);
    EXPECT_EQ(tags.back(), Tag::Sep);
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (r.enc.continuation[i]) EXPECT_EQ(tags[i], Tag::X);
    }
    const auto d = decodeSpans(r.enc, tags);
    EXPECT_EQ(d.spans, r.spans);
    EXPECT_TRUE(d.warnings.empty());
  }
}

// Oracle: spans are the matches of [BI]I* over the head-piece tags, every
// other tag read as O.
std::vector<WordSpan> regexSpans(const EncodedSentence& s, const std::vector<Tag>& tags) {
  std::string letters(s.words.size(), 'O');
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (s.wordOf[i] < 0 || s.continuation[i]) continue;
    const auto w = static_cast<std::size_t>(s.wordOf[i]);
    letters[w] = tags[i] == Tag::B ? 'B' : tags[i] == Tag::I ? 'I' : 'O';
  }
  std::vector<WordSpan> out;
  static const std::regex span("[BI]I*");
  for (auto it = std::sregex_iterator(letters.begin(), letters.end(), span); it != std::sregex_iterator(); ++it) {
    out.push_back({static_cast<std::size_t>(it->position()), static_cast<std::size_t>(it->position() + it->length())});
  }
  return out;
}

TEST(Iob, DecodeMatchesRegexOracleOnArbitraryTags) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> tag(0, kNumTags - 1);
  for (int n = 0; n < 1000; ++n) {
    const auto r = randomLayout(rng);
    std::vector<Tag> tags(r.enc.size());
    for (auto& t : tags) t = static_cast<Tag>(tag(rng));
    const auto d = decodeSpans(r.enc, tags);
    EXPECT_EQ(d.spans, regexSpans(r.enc, tags));
    for (const auto& sp : d.spans) {
      EXPECT_LT(sp.begin, sp.end);
      EXPECT_LE(sp.end, r.enc.words.size());
    }
  }
}

TEST(Iob, RepairsIWithoutBAndWarns) {
  const auto enc = encodeWords({"Breast", "Cancer"}, demoVocab());
  std::vector<Tag> tags(enc.size(), Tag::O);
  for (std::size_t i = 0; i < enc.size(); ++i) {
    if (enc.wordOf[i] >= 0) tags[i] = enc.continuation[i] ? Tag::X : Tag::I;
  }
  tags.front() = Tag::Cls;
  tags.back() = Tag::Sep;
  const auto d = decodeSpans(enc, tags);
  ASSERT_EQ(d.spans.size(), 1u);
  EXPECT_EQ(d.spans[0], (WordSpan{0, 2}));
  EXPECT_EQ(d.warnings.size(), 1u);
}

TEST(Iob, SpecialTagsEndSpansAndOverlapResolutionPrefersScoreThenName) {
  EntityMention g{"d", 0, {0, 2}, "A B", EntityType::Gene, {{EntityType::Gene, 1}}, 0.8, std::nullopt};
  EntityMention d{"d", 0, {1, 3}, "B C", EntityType::Disease, {{EntityType::Disease, 1}}, 0.6, std::nullopt};
  auto out = resolveTypes({g, d});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].type, EntityType::Gene);
  EXPECT_NEAR(out[0].typeDistribution[EntityType::Gene] + out[0].typeDistribution[EntityType::Disease], 1.0, 1e-12);
  d.score = 0.8;
  out = resolveTypes({g, d});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].type, EntityType::Disease);
  EntityMention far = d;
  far.span = {5, 6};
  EXPECT_EQ(resolveTypes({g, far}).size(), 2u);
}

// ---- tagger numerics -----------------------------------------------------

TaggerHead randomHead(std::mt19937_64& rng, std::size_t features, std::size_t hidden) {
  return TaggerHead::init(EntityType::Gene, features, hidden, rng());
}

Eigen::MatrixXd randomInput(std::mt19937_64& rng, Eigen::Index n, Eigen::Index h) {
  std::normal_distribution<double> d(0, 1);
  return Eigen::MatrixXd::NullaryExpr(n, h, [&] { return d(rng); });
}

std::vector<Tag> randomGold(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> t(0, kNumTags - 1);
  std::vector<Tag> out(n);
  for (auto& x : out) x = static_cast<Tag>(t(rng));
  return out;
}

TEST(Tagger, SoftmaxRowsSumToOne) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 1000; ++n) {
    const auto head = randomHead(rng, 5, 8);
    const auto p = tagProbabilities(head, 10.0 * randomInput(rng, 6, 8));
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      EXPECT_NEAR(p.row(i).sum(), 1.0, 1e-12);
      EXPECT_GE(p.row(i).minCoeff(), 0.0);
    }
  }
}

TEST(Tagger, UniformModelLossIsLogOfTagCount) {
  std::mt19937_64 rng(2);
  auto head = randomHead(rng, 4, 6);
  head.weights.setZero();
  head.bias.setZero();
  const auto t = randomInput(rng, 9, 6);
  EXPECT_NEAR(sequenceLoss(head, t, randomGold(rng, 9)), std::log(static_cast<double>(kNumTags)), 1e-12);
}

TEST(Tagger, WrongWidthIsADimensionError) {
  std::mt19937_64 rng(3);
  const auto head = randomHead(rng, 4, 6);
  EXPECT_THROW(tagProbabilities(head, randomInput(rng, 3, 5)), DimensionError);
  EXPECT_THROW(sequenceLoss(head, randomInput(rng, 3, 6), randomGold(rng, 2)), DimensionError);
}

TEST(Tagger, AnalyticGradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(4);
  constexpr double h = 1e-6;
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-4 * std::max(1.0, std::abs(a) + std::abs(b)); };
  for (int n = 0; n < 20; ++n) {
    auto head = randomHead(rng, 3, 5);
    Eigen::MatrixXd t = randomInput(rng, 4, 5);
    const auto gold = randomGold(rng, 4);
    const auto g = sequenceGradient(head, t, gold);
    for (Eigen::Index i = 0; i < head.weights.size(); ++i) {
      const double keep = head.weights(i);
      head.weights(i) = keep + h;
      const double up = sequenceLoss(head, t, gold);
      head.weights(i) = keep - h;
      const double down = sequenceLoss(head, t, gold);
      head.weights(i) = keep;
      EXPECT_PRED2(close, (up - down) / (2 * h), g.weights(i));
    }
    for (Eigen::Index i = 0; i < head.bias.size(); ++i) {
      const double keep = head.bias(i);
      head.bias(i) = keep + h;
      const double up = sequenceLoss(head, t, gold);
      head.bias(i) = keep - h;
      const double down = sequenceLoss(head, t, gold);
      head.bias(i) = keep;
      EXPECT_PRED2(close, (up - down) / (2 * h), g.bias(i));
    }
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      const double keep = t(i);
      t(i) = keep + h;
      const double up = sequenceLoss(head, t, gold);
      t(i) = keep - h;
      const double down = sequenceLoss(head, t, gold);
      t(i) = keep;
      EXPECT_PRED2(close, (up - down) / (2 * h), g.input(i));
    }
  }
}

std::vector<LabeledSentence> smallCorpus() {
  return syntheticCorpus(NerLexicon::fromDataDir(testing::dataDir()), 120, 9);
}

NerModel freshModel(TrainConfig c) {
  return NerModel(demoVocab(), NerLexicon::fromDataDir(testing::dataDir()).gazetteer(), c);
}

TEST(Tagger, ZeroLearningRateGivesFlatLossCurve) {
  TrainConfig c;
  c.learningRate = 0;
  c.epochs = 3;
  auto m = freshModel(c);
  const auto r = m.train(smallCorpus());
  for (const auto& [type, curve] : r.lossCurves) {
    ASSERT_EQ(curve.size(), 3u);
    EXPECT_DOUBLE_EQ(curve[0], curve[1]);
    EXPECT_DOUBLE_EQ(curve[1], curve[2]);
  }
}

TEST(Tagger, DivergentTrainingRaisesNumericError) {
  TrainConfig c;
  c.learningRate = 1e300;
  c.clipNorm = 0;
  c.epochs = 2;
  auto m = freshModel(c);
  EXPECT_THROW(m.train(smallCorpus()), NumericError);
}

TEST(Tagger, InvalidConfigurationIsRejected) {
  TrainConfig c;
  c.dropout = 1.0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = {};
  c.batchSize = 0;
  EXPECT_THROW(c.validate(), ValidationError);
  c = {};
  c.maxSequenceLength = 2;
  EXPECT_THROW(c.validate(), ValidationError);
}

TEST(Tagger, TrainingIsDeterministicForASeed) {
  TrainConfig c;
  c.epochs = 2;
  c.dropout = 0.2;
  auto a = freshModel(c);
  auto b = freshModel(c);
  a.train(smallCorpus());
  b.train(smallCorpus());
  EXPECT_EQ(a.toJson(), b.toJson());
}

TEST(Tagger, ReachesTargetPrecisionAndRecallOnHeldOutSplit) {
  const auto& m = testing::trainedTagger();
  for (const auto& [type, curve] : m.lossCurves) {
    ASSERT_FALSE(curve.empty());
    EXPECT_LT(curve.back(), std::log(static_cast<double>(kNumTags)));
    EXPECT_LE(curve.back(), curve.front());
    ASSERT_GE(curve.size(), 5u);
    for (std::size_t e = 1; e < 5; ++e) EXPECT_LT(curve[e], curve[e - 1]) << entityTypeName(type) << " epoch " << e;
  }
  const auto s = evaluateNer(m, testing::nerTestSplit());
  EXPECT_GT(s.gold, 300u);
  EXPECT_GE(s.precision(), 0.95);
  EXPECT_GE(s.recall(), 0.95);
}

TEST(Tagger, RecognizesSampleEntities) {
  const auto doc = preprocess(testing::kSampleText, "sample");
  const auto& m = testing::trainedTagger();
  const auto s0 = m.recognize(doc.sentences[0], doc.text, doc.id, 0);
  ASSERT_EQ(s0.size(), 2u);
  EXPECT_EQ(s0[0].surface, "TP53");
  EXPECT_EQ(s0[0].type, EntityType::Gene);
  EXPECT_EQ(s0[1].surface, "Breast Cancer");
  EXPECT_EQ(s0[1].type, EntityType::Disease);
  for (const auto& e : s0) {
    double sum = 0;
    for (const auto& [t, p] : e.typeDistribution) sum += p;
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(Tagger, CheckpointRoundTripPreservesPredictions) {
  const auto& m = testing::trainedTagger();
  const auto path = (std::filesystem::temp_directory_path() / "onokg_ie_test_ckpt.json").string();
  m.save(path);
  const auto back = NerModel::load(path);
  std::filesystem::remove(path);
  EXPECT_EQ(back.toJson(), m.toJson());
  const auto doc = preprocess(testing::kSampleText);
  for (const auto& s : doc.sentences) {
    const auto a = m.recognize(s, doc.text);
    const auto b = back.recognize(s, doc.text);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].span, b[i].span);
      EXPECT_EQ(a[i].type, b[i].type);
      EXPECT_DOUBLE_EQ(a[i].score, b[i].score);
    }
  }
  EXPECT_THROW(NerModel::load(testing::dataPath("aliases.csv")), IoError);
}

TEST(Tagger, LongSentencesAreChunkedWithinTheLengthBudget) {
  TrainConfig c;
  c.maxSequenceLength = 16;
  const auto m = freshModel(c);
  std::vector<std::string> words;
  for (int k = 0; k < 12; ++k) {
    for (const char* w : {"the", "growth", "of", "Breast", "Cancer", "cells", "and", "TP53", "levels"}) words.push_back(w);
  }
  const auto chunks = m.chunk(words);
  ASSERT_GT(chunks.size(), 1u);
  const auto hits = m.gazetteer().match(words);
  std::size_t next = 0;
  for (const auto& ch : chunks) {
    EXPECT_EQ(ch.begin, next);
    next = ch.end;
    const auto enc = m.encode({words.begin() + static_cast<long>(ch.begin), words.begin() + static_cast<long>(ch.end)});
    EXPECT_LE(enc.size(), c.maxSequenceLength);
    if (ch.end < words.size()) EXPECT_FALSE(Gazetteer::splits(hits, ch.end));
  }
  EXPECT_EQ(next, words.size());
}

// ---- corpus formats ------------------------------------------------------

TEST(Corpus, ConllRoundTrip) {
  const auto corpus = smallCorpus();
  const auto path = (std::filesystem::temp_directory_path() / "onokg_ie_test.conll").string();
  text::writeFile(path, toConll(corpus));
  const auto back = loadConll(path);
  std::filesystem::remove(path);
  ASSERT_EQ(back.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(back[i].wordSpans(), corpus[i].wordSpans());
}

TEST(Corpus, DocumentsLoadInIdOrderAndMissingPathIsIoError) {
  const auto docs = loadDocuments(testing::dataPath("corpus/demo"));
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].id, "doc01");
  EXPECT_EQ(docs[2].id, "doc03");
  EXPECT_THROW(loadDocuments(testing::dataPath("corpus/nowhere")), IoError);
}

// ---- linking -------------------------------------------------------------

TEST(Linking, AliasesLabelsAndMinting) {
  const auto linker = demoLinker(testing::seedGraph());
  EXPECT_EQ(linker.link("Li-Fraumeni syndrome", EntityType::Gene), ono("TP53"));
  EXPECT_EQ(linker.link("Breast Cancer", EntityType::Disease), ono("BRCA"));
  EXPECT_EQ(linker.link("ERBB2", EntityType::Gene), ono("ERBB2"));
  EXPECT_EQ(linker.link("Breast invasive carcinoma", EntityType::Disease), ono("BRCA"));
  const auto minted = linker.link("XYZ999", EntityType::Gene);
  EXPECT_EQ(minted, Term::iri(std::string(vocab::kNorm) + "gene/xyz999"));
  EXPECT_TRUE(linker.isMinted(minted));
  EXPECT_FALSE(linker.isMinted(ono("TP53")));
}

TEST(Linking, EqualNormalizedSurfacesLinkToEqualIris) {
  const auto linker = demoLinker(testing::seedGraph());
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> letter(0, 25), len(3, 8);
  for (int n = 0; n < 200; ++n) {
    std::string w;
    for (int k = len(rng); k > 0; --k) w += static_cast<char>('a' + letter(rng));
    std::string upper = w;
    for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    EXPECT_EQ(linker.link(w, EntityType::Disease), linker.link(upper, EntityType::Disease));
    EXPECT_EQ(linker.link(w + " cancer", EntityType::Disease), linker.link(upper + " Cancers", EntityType::Disease));
  }
}

// ---- relations and enrichment --------------------------------------------

std::set<kg::Triple> tripleSet(const std::vector<ExtractedTriple>& ts) {
  std::set<kg::Triple> out;
  for (const auto& t : ts) out.insert(t.triple);
  return out;
}

TEST(Relations, SampleYieldsExactlyFourTriples) {
  const auto& s = ontology::schema();
  const auto linker = demoLinker(testing::seedGraph());
  RuleRelationClassifier rules;
  const auto a = analyzeDocument(preprocess(testing::kSampleText, "sample"), testing::trainedTagger(), linker, rules);
  const std::set<kg::Triple> expected = {
      {ono("TP53"), s.causes, ono("BRCA")},
      {ono("BRCA"), s.isA, s.disease},
      {ono("TP53"), s.hasType, s.potsf},
      {s.potsf, s.hasEvidence, s.pubMed},
  };
  EXPECT_EQ(a.triples.size(), 4u);
  EXPECT_EQ(tripleSet(a.triples), expected);
}

TEST(Relations, AnonymizationMasksExactlyThePair) {
  const auto linker = demoLinker(testing::seedGraph());
  RuleRelationClassifier rules;
  const auto a = analyzeDocument(preprocess(testing::kSampleText, "sample"), testing::trainedTagger(), linker, rules);
  ASSERT_FALSE(a.relations.empty());
  static const std::regex marker("@(GENE|DISEASE|TYPE|EVIDENCE|CLASS)\\$");
  for (const auto& r : a.relations) {
    const auto n = std::distance(std::sregex_iterator(r.anonymized.begin(), r.anonymized.end(), marker), std::sregex_iterator());
    EXPECT_EQ(n, 2) << r.anonymized;
  }
}

TEST(Relations, SingleMentionGivesNoCandidates) {
  RuleRelationClassifier rules;
  const std::vector<std::string> words = {"TP53", "is", "studied", "."};
  EXPECT_TRUE(extractRelations(words, {{{0, 1}, MentionKind::Gene, "TP53", ono("TP53")}}, rules).empty());
}

TEST(Relations, ShuffledNonsenseIsLabelledNone) {
  RuleRelationClassifier rules;
  std::mt19937_64 rng(11);
  std::vector<std::string> filler = {"blue", "seven", "under", "quickly", "table", "river", "of", "the", "green", "sang"};
  for (int n = 0; n < 200; ++n) {
    std::shuffle(filler.begin(), filler.end(), rng);
    std::vector<std::string> words = {"TP53"};
    words.insert(words.end(), filler.begin(), filler.end());
    words.push_back("Breast");
    words.push_back("Cancer");
    const auto c = extractRelations(words,
                                    {{{0, 1}, MentionKind::Gene, "TP53", ono("TP53")},
                                     {{words.size() - 2, words.size()}, MentionKind::Disease, "Breast Cancer", ono("BRCA")}},
                                    rules);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].label, RelationLabel::None);
    EXPECT_EQ(c[0].confidence, 0.0);
  }
}

TEST(Enrichment, ThresholdDuplicatesProvenanceAndIdempotence) {
  kg::Graph g = testing::seedGraph();
  const auto linker = demoLinker(g);
  RuleRelationClassifier rules;
  const auto docs = loadDocuments(testing::dataPath("corpus/demo"));

  kg::Graph strict = g;
  const auto none = enrichFromDocuments(strict, docs, testing::trainedTagger(), linker, rules, 0.95);
  EXPECT_GT(none.proposed, 0u);
  EXPECT_EQ(none.accepted, 0u);
  EXPECT_EQ(none.rejected, none.proposed);
  EXPECT_TRUE(sameTriples(strict, g));

  const auto first = enrichFromDocuments(g, docs, testing::trainedTagger(), linker, rules, 0.5);
  EXPECT_EQ(first.accepted + first.rejected, first.proposed);
  EXPECT_EQ(first.inserted + first.duplicates, first.accepted);
  EXPECT_GT(first.inserted, 0u);
  EXPECT_GT(first.duplicates, 0u);  // TP53 causes BRCA is curated already
  for (const auto& t : first.insertedTriples) {
    EXPECT_TRUE(g.contains(t.triple));
    const auto stmts = g.match(std::nullopt, Term::iri(vocab::kRdfSubject), t.triple.subject);
    bool found = false;
    for (const auto& st : stmts) {
      found = found || (g.contains({st.subject, Term::iri(vocab::kRdfObject), t.triple.object}) &&
                        g.contains({st.subject, ontology::schema().sourceDocument, Term::literal(t.docId)}));
    }
    EXPECT_TRUE(found);
  }
  const kg::Graph after = g;
  const auto second = enrichFromDocuments(g, docs, testing::trainedTagger(), linker, rules, 0.5);
  EXPECT_EQ(second.inserted, 0u);
  EXPECT_EQ(second.duplicates, second.accepted);
  EXPECT_TRUE(sameTriples(g, after));

  EXPECT_THROW(enrichGraph(g, {}, 1.5), ValidationError);
}

TEST(Enrichment, DocumentOrderDoesNotMatter) {
  const auto linker = demoLinker(testing::seedGraph());
  RuleRelationClassifier rules;
  auto docs = loadDocuments(testing::dataPath("corpus/demo"));
  kg::Graph a = testing::seedGraph(), b = testing::seedGraph();
  enrichFromDocuments(a, docs, testing::trainedTagger(), linker, rules, 0.5);
  std::reverse(docs.begin(), docs.end());
  enrichFromDocuments(b, docs, testing::trainedTagger(), linker, rules, 0.5);
  EXPECT_TRUE(sameTriples(a, b));
}

}  // namespace
}  // namespace onokg
