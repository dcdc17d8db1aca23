#include "onokg/ontology/schema.h"

#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"

namespace onokg::ontology {

using kg::Term;

namespace {

Term rdf(std::string_view iri) { return Term::iri(iri); }

}  // namespace

Term ono(std::string_view local) { return Term::iri(std::string(vocab::kOno) + std::string(local)); }

std::optional<GeneType> parseGeneType(std::string_view s) {
  auto k = text::toLower(text::trim(s));
  if (k == "oncogene") return GeneType::Oncogene;
  if (k == "proteincoding" || k == "protein-coding" || k == "protein coding") return GeneType::ProteinCoding;
  if (k == "potsf") return GeneType::Potsf;
  return std::nullopt;
}

std::optional<Significance> parseSignificance(std::string_view s) {
  auto k = text::toLower(text::trim(s));
  if (k == "high") return Significance::High;
  if (k == "medium") return Significance::Medium;
  if (k == "low") return Significance::Low;
  return std::nullopt;
}

std::optional<EvidenceSource> parseEvidence(std::string_view s) {
  auto k = text::toLower(text::trim(s));
  if (k == "pubmed") return EvidenceSource::PubMed;
  if (k == "mesh") return EvidenceSource::MeSH;
  if (k == "cancerindex") return EvidenceSource::CancerIndex;
  return std::nullopt;
}

std::string_view className(GeneType t) {
  switch (t) {
    case GeneType::Oncogene: return "Oncogene";
    case GeneType::ProteinCoding: return "ProteinCoding";
    case GeneType::Potsf: return "POTSF";
  }
  return "";
}

std::string_view className(Significance s) {
  switch (s) {
    case Significance::High: return "High";
    case Significance::Medium: return "Medium";
    case Significance::Low: return "Low";
  }
  return "";
}

std::string_view className(EvidenceSource e) {
  switch (e) {
    case EvidenceSource::PubMed: return "PubMed";
    case EvidenceSource::MeSH: return "MeSH";
    case EvidenceSource::CancerIndex: return "CancerIndex";
  }
  return "";
}

Term OnoSchema::of(GeneType t) const { return ono(className(t)); }
Term OnoSchema::of(Significance s) const { return ono(className(s)); }
Term OnoSchema::of(EvidenceSource e) const { return ono(className(e)); }

std::vector<Term> OnoSchema::classes() const {
  return {cancer, biomarker, feature, disease, diseaseOfCellularProliferation,
          biomarkerType, oncogene, proteinCoding, potsf,
          significance, high, medium, low,
          evidence, pubMed, meSH, cancerIndex, article};
}

std::vector<Term> OnoSchema::objectProperties() const {
  return {causes, isA, hasType, hasSignificance, hasEvidence, hasCitations,
          crossResponsibility, hasGOAssociation, instanceOf, hasFeature, forCancer};
}

std::vector<Term> OnoSchema::datatypeProperties() const {
  return {citationCount, carcinomaType, provenance, sourceDocument};
}

const OnoSchema& schema() {
  static const OnoSchema s = [] {
    OnoSchema o;
    o.cancer = ono("Cancer");
    o.biomarker = ono("Biomarker");
    o.feature = ono("Feature");
    o.disease = ono("Disease");
    o.diseaseOfCellularProliferation = ono("DiseaseOfCellularProliferation");
    o.biomarkerType = ono("BiomarkerType");
    o.oncogene = ono("Oncogene");
    o.proteinCoding = ono("ProteinCoding");
    o.potsf = ono("POTSF");
    o.significance = ono("Significance");
    o.high = ono("High");
    o.medium = ono("Medium");
    o.low = ono("Low");
    o.evidence = ono("Evidence");
    o.pubMed = ono("PubMed");
    o.meSH = ono("MeSH");
    o.cancerIndex = ono("CancerIndex");
    o.article = ono("Article");
    o.causes = ono("causes");
    o.isA = ono("isA");
    o.hasType = ono("hasType");
    o.hasSignificance = ono("hasSignificance");
    o.hasEvidence = ono("hasEvidence");
    o.hasCitations = ono("hasCitations");
    o.crossResponsibility = ono("crossResponsibility");
    o.hasGOAssociation = ono("hasGOAssociation");
    o.instanceOf = ono("instanceOf");
    o.hasFeature = ono("hasFeature");
    o.forCancer = ono("forCancer");
    o.citationCount = ono("citationCount");
    o.carcinomaType = ono("carcinomaType");
    o.provenance = ono("provenance");
    o.sourceDocument = ono("sourceDocument");
    return o;
  }();
  return s;
}

void assertSchema(kg::Graph& g) {
  const auto& s = schema();
  const Term type = rdf(vocab::kRdfType);
  const Term label = rdf(vocab::kRdfsLabel);
  const Term sub = rdf(vocab::kRdfsSubClassOf);
  const Term domain = rdf(vocab::kRdfsDomain);
  const Term range = rdf(vocab::kRdfsRange);

  for (const auto& c : s.classes()) {
    g.insert({c, type, rdf(vocab::kOwlClass)});
    g.insert({c, label, Term::literal(kg::localName(c.lexical()))});
  }
  auto subclass = [&](const Term& a, const Term& b) { g.insert({a, sub, b}); };
  subclass(s.cancer, s.diseaseOfCellularProliferation);
  subclass(s.diseaseOfCellularProliferation, s.disease);
  for (const auto& c : {s.oncogene, s.proteinCoding, s.potsf}) subclass(c, s.biomarkerType);
  for (const auto& c : {s.high, s.medium, s.low}) subclass(c, s.significance);
  for (const auto& c : {s.pubMed, s.meSH, s.cancerIndex}) subclass(c, s.evidence);

  for (const auto& p : s.objectProperties()) {
    g.insert({p, type, rdf(vocab::kOwlObjectProperty)});
    g.insert({p, label, Term::literal(kg::localName(p.lexical()))});
  }
  for (const auto& p : s.datatypeProperties()) {
    g.insert({p, type, rdf(vocab::kOwlDatatypeProperty)});
    g.insert({p, label, Term::literal(kg::localName(p.lexical()))});
  }

  auto dr = [&](const Term& p, const std::optional<Term>& d, const std::optional<Term>& r) {
    if (d) g.insert({p, domain, *d});
    if (r) g.insert({p, range, *r});
  };
  dr(s.causes, s.biomarker, s.disease);
  dr(s.crossResponsibility, s.biomarker, s.cancer);
  dr(s.isA, std::nullopt, s.biomarkerType);
  dr(s.hasType, std::nullopt, s.biomarkerType);
  dr(s.hasSignificance, std::nullopt, s.significance);
  dr(s.hasEvidence, std::nullopt, s.evidence);
  dr(s.hasCitations, s.biomarker, s.article);
  dr(s.hasGOAssociation, s.biomarker, std::nullopt);
  dr(s.hasFeature, s.biomarker, s.feature);
  dr(s.forCancer, s.feature, s.cancer);
  dr(s.citationCount, s.feature, rdf(vocab::kXsdInteger));
  dr(s.carcinomaType, s.cancer, rdf(vocab::kXsdString));
}

}  // namespace onokg::ontology
