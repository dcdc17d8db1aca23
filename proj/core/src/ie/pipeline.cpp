#include "onokg/ie/pipeline.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/schema.h"

namespace onokg::ie {

using kg::Term;

DocumentAnalysis analyzeDocument(const Document& doc, const NerModel& model, const Linker& linker,
                                 const RelationClassifier& classifier) {
  DocumentAnalysis a;
  a.document = doc;
  for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
    const auto& sentence = doc.sentences[si];
    std::vector<std::string> words;
    for (const auto& t : sentence) words.push_back(t.form);
    auto surfaceOf = [&](const WordSpan& sp) {
      return std::string(doc.text.substr(sentence[sp.begin].begin, sentence[sp.end - 1].end - sentence[sp.begin].begin));
    };

    auto mentions = model.recognize(sentence, doc.text, doc.id, si);
    std::vector<Participant> parts;
    std::vector<bool> covered(words.size(), false);
    for (auto& m : mentions) {
      m.normalizedId = linker.link(m.surface, m.type);
      parts.push_back({m.span, m.type == EntityType::Gene ? MentionKind::Gene : MentionKind::Disease, m.surface, *m.normalizedId});
      for (std::size_t w = m.span.begin; w < m.span.end; ++w) covered[w] = true;
    }
    for (const auto& h : matchLexicon(words)) {
      bool overlap = false;
      for (std::size_t w = h.span.begin; w < h.span.end; ++w) overlap = overlap || covered[w];
      if (!overlap) parts.push_back({h.span, h.kind, surfaceOf(h.span), h.term});
    }
    auto rels = extractRelations(words, parts, classifier, si);
    for (const auto& r : rels) {
      if (r.label == RelationLabel::None) continue;
      ExtractedTriple t;
      t.triple = {r.subject.id, relationPredicate(r.label), r.object.id};
      t.label = r.label;
      t.confidence = r.confidence;
      t.docId = doc.id;
      t.sentence = si;
      t.subjectSurface = r.subject.surface;
      t.objectSurface = r.object.surface;
      t.subjectMinted = linker.isMinted(r.subject.id);
      t.objectMinted = linker.isMinted(r.object.id);
      t.subjectKind = r.subject.kind;
      t.objectKind = r.object.kind;
      a.triples.push_back(std::move(t));
    }
    std::sort(parts.begin(), parts.end(), [](const Participant& x, const Participant& y) { return x.span < y.span; });
    a.mentions.push_back(std::move(mentions));
    a.participants.push_back(std::move(parts));
    for (auto& r : rels) a.relations.push_back(std::move(r));
  }
  return a;
}

nlohmann::json EnrichmentReport::toJson() const {
  auto triples = nlohmann::json::array();
  for (const auto& t : insertedTriples) {
    triples.push_back({{"subject", t.triple.subject.lexical()},
                       {"predicate", t.triple.predicate.lexical()},
                       {"object", t.triple.object.lexical()},
                       {"confidence", t.confidence},
                       {"document", t.docId},
                       {"sentence", t.sentence}});
  }
  return {{"proposed", proposed}, {"accepted", accepted}, {"rejected", rejected},
          {"duplicates", duplicates}, {"inserted", inserted}, {"documents", documents},
          {"skipped_documents", skippedDocuments}, {"triples", triples}};
}

std::string EnrichmentReport::toText() const {
  std::ostringstream out;
  out << "documents " << documents << ", skipped " << skippedDocuments.size() << ", proposed " << proposed << ", accepted " << accepted << ", rejected " << rejected << ", duplicates " << duplicates
      << ", inserted " << inserted << "\n";
  return out.str();
}

namespace {

void describeMinted(kg::Graph& g, const Term& node, MentionKind kind, const std::string& surface) {
  const auto& s = ontology::schema();
  const Term cls = kind == MentionKind::Gene ? s.biomarker : s.disease;
  g.insert({node, Term::iri(vocab::kRdfType), cls});
  g.insert({node, Term::iri(vocab::kRdfsLabel), Term::literal(surface)});
}

}  // namespace

EnrichmentReport enrichGraph(kg::Graph& g, const std::vector<ExtractedTriple>& triples, double threshold) {
  if (!(threshold >= 0 && threshold <= 1)) throw ValidationError("threshold", "must lie in [0, 1]");
  const auto& s = ontology::schema();
  EnrichmentReport r;
  for (const auto& t : triples) {
    if (t.label == RelationLabel::None) continue;
    ++r.proposed;
    if (t.confidence < threshold) {
      ++r.rejected;
      continue;
    }
    ++r.accepted;
    if (g.contains(t.triple)) {
      ++r.duplicates;
    } else {
      g.insert(t.triple);
      ++r.inserted;
      r.insertedTriples.push_back(t);
    }
    if (t.subjectMinted) describeMinted(g, t.triple.subject, t.subjectKind, t.subjectSurface);
    if (t.objectMinted) describeMinted(g, t.triple.object, t.objectKind, t.objectSurface);
    const std::string key = t.triple.subject.lexical() + "\n" + t.triple.predicate.lexical() + "\n" + t.triple.object.lexical() + "\n" + t.docId;
    const Term stmt = Term::iri(std::string(vocab::kNorm) + "statement/" + text::hex64(text::fnv1a(key)));
    g.insert({stmt, Term::iri(vocab::kRdfType), Term::iri(vocab::kRdfStatement)});
    g.insert({stmt, Term::iri(vocab::kRdfSubject), t.triple.subject});
    g.insert({stmt, Term::iri(vocab::kRdfPredicate), t.triple.predicate});
    g.insert({stmt, Term::iri(vocab::kRdfObject), t.triple.object});
    g.insert({stmt, s.sourceDocument, Term::literal(t.docId)});
    g.insert({stmt, s.provenance, Term::literal("extracted")});
  }
  return r;
}

EnrichmentReport enrichFromDocuments(kg::Graph& g, std::vector<Document> docs, const NerModel& model, const Linker& linker,
                                     const RelationClassifier& classifier, double threshold) {
  std::sort(docs.begin(), docs.end(), [](const Document& a, const Document& b) { return a.id < b.id; });
  std::vector<ExtractedTriple> all;
  for (const auto& d : docs) {
    auto a = analyzeDocument(d, model, linker, classifier);
    for (auto& t : a.triples) all.push_back(std::move(t));
  }
  auto report = enrichGraph(g, all, threshold);
  report.documents = docs.size();
  return report;
}

}  // namespace onokg::ie
