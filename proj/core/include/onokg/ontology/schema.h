#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onokg/kg/graph.h"
#include "onokg/kg/term.h"

namespace onokg::ontology {

enum class GeneType { Oncogene, ProteinCoding, Potsf };
enum class Significance { High, Medium, Low };
enum class EvidenceSource { PubMed, MeSH, CancerIndex };

// Parsing accepts the class local name ("ProteinCoding", "POTSF") and the
// free-text spellings ("Protein-coding", "HIGH"); matching is case-insensitive.
std::optional<GeneType> parseGeneType(std::string_view s);
std::optional<Significance> parseSignificance(std::string_view s);
std::optional<EvidenceSource> parseEvidence(std::string_view s);

std::string_view className(GeneType t);
std::string_view className(Significance s);
std::string_view className(EvidenceSource e);

// ono:<local>
kg::Term ono(std::string_view local);

// Class and property IRIs of the ontology. Every property IRI is distinct.
struct OnoSchema {
  kg::Term cancer, biomarker, feature, disease, diseaseOfCellularProliferation;
  kg::Term biomarkerType, oncogene, proteinCoding, potsf;
  kg::Term significance, high, medium, low;
  kg::Term evidence, pubMed, meSH, cancerIndex;
  kg::Term article;

  kg::Term causes, isA, hasType, hasSignificance, hasEvidence, hasCitations;
  kg::Term crossResponsibility, hasGOAssociation, instanceOf;
  kg::Term hasFeature, forCancer, citationCount, carcinomaType, provenance, sourceDocument;

  kg::Term of(GeneType t) const;
  kg::Term of(Significance s) const;
  kg::Term of(EvidenceSource e) const;

  std::vector<kg::Term> classes() const;
  std::vector<kg::Term> objectProperties() const;
  std::vector<kg::Term> datatypeProperties() const;
};

const OnoSchema& schema();

// Asserts the class hierarchy and property declarations. Idempotent.
void assertSchema(kg::Graph& g);

}  // namespace onokg::ontology
