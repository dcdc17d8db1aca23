#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "onokg/kg/graph.h"
#include "onokg/ontology/schema.h"

namespace onokg::ontology {

struct Cohort {
  std::string code;
  std::string name;
};

// The cancer cohort table: unique codes, file order preserved.
class CohortTable {
 public:
  static CohortTable load(const std::string& path);

  void add(Cohort c);  // throws ValidationError on a duplicate code
  const Cohort* find(std::string_view code) const;
  std::size_t size() const { return rows_.size(); }
  const std::vector<Cohort>& rows() const { return rows_; }

 private:
  std::vector<Cohort> rows_;
};

inline constexpr std::size_t kCohortTableSize = 33;

struct BiomarkerRecord {
  std::string symbol;
  GeneType geneType = GeneType::Potsf;
  std::set<EvidenceSource> evidenceTypes;
  std::uint64_t citations = 0;

  // citations >= 1 whenever evidence is present.
  bool valid() const { return evidenceTypes.empty() || citations >= 1; }
};

struct AssociationFeature {
  kg::Term gene;
  kg::Term cancer;
  Significance significance = Significance::High;
  kg::Term evidence;
  std::uint64_t citations = 0;
};

// Adds `code` as a Cancer instance labelled with the code and carrying the
// full name.
kg::Term addCohort(kg::Graph& g, const Cohort& c);

// Adds a Biomarker instance with its type (hasType and isA both point at the
// type class).
kg::Term addBiomarker(kg::Graph& g, std::string_view symbol, GeneType type);

// Reifies the association as a Feature node and adds the biomarker-level
// edges (causes, crossResponsibility, hasSignificance, hasEvidence and one
// hasCitations article per citation). Re-asserting an identical association
// returns the existing node and leaves the graph unchanged. Throws
// UnknownNameError when gene or cancer are not typed Biomarker / Cancer, and
// ValidationError when the node exists with different content.
kg::Term assertAssociation(kg::Graph& g, const AssociationFeature& f,
                           std::string_view provenance = "curated");

// Reads gene,cohort,significance,evidence,citations rows; cohort codes and
// gene symbols are resolved to ono: nodes.
std::size_t loadAssociations(kg::Graph& g, const std::string& path,
                             std::string_view provenance);

// Loads the optional cohorts.csv, biomarkers.csv and associations.csv of an
// extension directory; missing files are skipped.
void loadExtension(kg::Graph& g, const std::string& dir, std::string_view provenance);

// Seed graph from the bundled data directory: schema, the cohort table rows plus MED,
// the POTSF roster, the biomarker table, curated TP53 associations and the
// extension directory. Throws IoError / ValidationError naming the file.
kg::Graph buildSeedOntology(const std::string& dataDir);

// Summary of a biomarker as stored in the graph.
BiomarkerRecord biomarkerRecord(const kg::Graph& g, const kg::Term& gene);

std::string defaultDataDir();

}  // namespace onokg::ontology
