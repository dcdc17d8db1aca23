#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onokg/ie/iob.h"
#include "onokg/ie/linking.h"
#include "onokg/ie/preprocess.h"
#include "onokg/ie/relations.h"
#include "onokg/ie/tagger.h"
#include "onokg/kg/graph.h"

namespace onokg::ie {

struct ExtractedTriple {
  kg::Triple triple;
  RelationLabel label = RelationLabel::None;
  double confidence = 0.0;
  std::string docId;
  std::size_t sentence = 0;
  std::string subjectSurface, objectSurface;
  bool subjectMinted = false, objectMinted = false;
  MentionKind subjectKind = MentionKind::Gene, objectKind = MentionKind::Gene;
};

struct DocumentAnalysis {
  Document document;
  std::vector<std::vector<EntityMention>> mentions;     // per sentence, linked
  std::vector<std::vector<Participant>> participants;   // per sentence
  std::vector<RelationCandidate> relations;             // every pair, None included
  std::vector<ExtractedTriple> triples;                 // non-None relations
};

// Recognition, linking, lexicon matching and relation classification of one
// document. Deterministic for a fixed model.
DocumentAnalysis analyzeDocument(const Document& doc, const NerModel& model, const Linker& linker,
                                 const RelationClassifier& classifier);

struct EnrichmentReport {
  std::size_t proposed = 0;    // non-None triples offered
  std::size_t accepted = 0;    // confidence >= threshold, duplicates included
  std::size_t rejected = 0;    // below threshold
  std::size_t duplicates = 0;  // accepted but already present
  std::size_t inserted = 0;    // accepted and new
  std::size_t documents = 0;   // documents analyzed
  std::vector<std::string> skippedDocuments;
  std::vector<ExtractedTriple> insertedTriples;

  nlohmann::json toJson() const;
  std::string toText() const;
};

// Commits accepted triples with a reified provenance statement per
// (triple, document). Minted nodes get a type and a label. Re-running with
// the same input leaves the graph unchanged. Throws ValidationError when the
// threshold lies outside [0, 1].
EnrichmentReport enrichGraph(kg::Graph& g, const std::vector<ExtractedTriple>& triples, double threshold);

// Analyzes the documents in id order and commits their triples.
EnrichmentReport enrichFromDocuments(kg::Graph& g, std::vector<Document> docs, const NerModel& model, const Linker& linker,
                                     const RelationClassifier& classifier, double threshold);

}  // namespace onokg::ie
