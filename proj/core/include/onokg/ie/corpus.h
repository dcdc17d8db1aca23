#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onokg/ie/gazetteer.h"
#include "onokg/ie/iob.h"
#include "onokg/ie/preprocess.h"

namespace onokg::ie {

// Character range of a gold mention in its sentence text.
struct GoldMention {
  std::size_t begin = 0, end = 0;
  EntityType type = EntityType::Gene;
};

struct LabeledSentence {
  std::string text;
  std::vector<GoldMention> mentions;

  // Tokens of the text (all sentences the splitter finds, concatenated).
  std::vector<Token> tokens() const;
  // Gold mentions as word spans over tokens(). Throws ValidationError when a
  // mention does not align with token boundaries.
  std::vector<std::pair<WordSpan, EntityType>> wordSpans() const;
};

// Surface forms used to fill the sentence templates.
struct NerLexicon {
  std::vector<std::string> genes;
  std::vector<std::string> diseases;
  std::vector<std::string> geneTypes;
  std::vector<std::string> evidence;

  // Genes from the gene roster and biomarker tables, diseases from the
  // cohort tables and ner/diseases.txt.
  static NerLexicon fromDataDir(const std::string& dataDir);
  Gazetteer gazetteer() const;
};

// Template sentences with gold spans; deterministic for a seed. About one
// gene mention in seven is a fresh symbol absent from the lexicon.
std::vector<LabeledSentence> syntheticCorpus(const NerLexicon& lexicon, std::size_t count, std::uint64_t seed);

// First `trainFraction` of the items (after a seeded shuffle) and the rest.
std::pair<std::vector<LabeledSentence>, std::vector<LabeledSentence>> splitCorpus(
    std::vector<LabeledSentence> corpus, double trainFraction, std::uint64_t seed);

// CoNLL-style file: "word<TAB>tag" lines (tags B-Gene, I-Disease, O), blank
// line between sentences.
std::vector<LabeledSentence> loadConll(const std::string& path);
std::string toConll(const std::vector<LabeledSentence>& corpus);

// A directory of *.txt files (id = file stem, name order) or a JSON-lines
// file of {"id","text"} objects. With `skipped` set, a document that cannot
// be read or parsed is logged, named in `skipped` and left out; otherwise it
// throws. A missing path always throws IoError.
std::vector<Document> loadDocuments(const std::string& path, std::vector<std::string>* skipped = nullptr);

}  // namespace onokg::ie
