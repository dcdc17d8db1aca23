#include "onokg/ontology/seed.h"

#include <cstdlib>
#include <filesystem>
#include <map>

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"

#ifndef ONOKG_DEFAULT_DATA_DIR
#define ONOKG_DEFAULT_DATA_DIR "data"
#endif

namespace onokg::ontology {

using kg::Term;
namespace fs = std::filesystem;

namespace {

const Term& rdfType() {
  static const Term t = Term::iri(vocab::kRdfType);
  return t;
}

const Term& rdfsLabel() {
  static const Term t = Term::iri(vocab::kRdfsLabel);
  return t;
}

std::size_t column(const text::CsvTable& t, std::string_view name, const std::string& path) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (text::toLower(t.header[i]) == name) return i;
  }
  throw ValidationError(path, "missing column '" + std::string(name) + "'");
}

std::optional<Term> single(const kg::Graph& g, const Term& s, const Term& p) {
  auto m = g.match(s, p, std::nullopt);
  if (m.size() != 1) return std::nullopt;
  return m.front().object;
}

void requireFile(const std::string& path) {
  if (!fs::exists(path)) throw IoError(path, "required data file is missing");
}

}  // namespace

CohortTable CohortTable::load(const std::string& path) {
  auto csv = text::readCsvFile(path);
  auto code = column(csv, "code", path);
  auto name = column(csv, "name", path);
  CohortTable t;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto& row = csv.rows[i];
    if (row[code].empty()) {
      throw ValidationError(path + ":" + std::to_string(csv.lines[i]), "empty cohort code");
    }
    try {
      t.add({row[code], row[name]});
    } catch (const ValidationError& e) {
      throw ValidationError(path + ":" + std::to_string(csv.lines[i]), e.what());
    }
  }
  return t;
}

void CohortTable::add(Cohort c) {
  if (find(c.code)) throw ValidationError("code", "duplicate cohort code '" + c.code + "'");
  rows_.push_back(std::move(c));
}

const Cohort* CohortTable::find(std::string_view code) const {
  for (const auto& r : rows_) {
    if (r.code == code) return &r;
  }
  return nullptr;
}

Term addCohort(kg::Graph& g, const Cohort& c) {
  const auto& s = schema();
  Term node = ono(c.code);
  g.insert({node, rdfType(), s.cancer});
  g.insert({node, rdfsLabel(), Term::literal(c.code)});
  if (!c.name.empty()) g.insert({node, s.carcinomaType, Term::literal(c.name)});
  return node;
}

Term addBiomarker(kg::Graph& g, std::string_view symbol, GeneType type) {
  const auto& s = schema();
  Term node = ono(symbol);
  g.insert({node, rdfType(), s.biomarker});
  g.insert({node, rdfsLabel(), Term::literal(symbol)});
  g.insert({node, s.hasType, s.of(type)});
  g.insert({node, s.isA, s.of(type)});
  return node;
}

Term assertAssociation(kg::Graph& g, const AssociationFeature& f, std::string_view provenance) {
  const auto& s = schema();
  if (!g.contains({f.gene, rdfType(), s.biomarker})) {
    throw UnknownNameError("gene", f.gene.display());
  }
  if (!g.contains({f.cancer, rdfType(), s.cancer})) {
    throw UnknownNameError("cancer", f.cancer.display());
  }
  const std::string gene = f.gene.display();
  const std::string cohort = f.cancer.display();
  const std::string source = f.evidence.display();
  const std::string key = gene + "_" + cohort + "_" + source;
  Term node = ono("Feature_" + key);
  const Term sig = s.of(f.significance);
  const Term count = Term::integer(static_cast<long long>(f.citations));

  if (g.contains({node, rdfType(), s.feature})) {
    bool same = single(g, node, s.hasSignificance) == sig &&
                single(g, node, s.forCancer) == f.cancer &&
                single(g, node, s.hasEvidence) == f.evidence &&
                single(g, node, s.citationCount) == count;
    if (!same) {
      throw ValidationError("association", "conflicting association already asserted for " + key);
    }
    return node;
  }

  g.insert({node, rdfType(), s.feature});
  g.insert({node, rdfsLabel(), Term::literal(gene + " / " + cohort + " / " + source)});
  g.insert({node, s.forCancer, f.cancer});
  g.insert({node, s.hasSignificance, sig});
  g.insert({node, s.hasEvidence, f.evidence});
  g.insert({node, s.citationCount, count});
  g.insert({node, s.provenance, Term::literal(provenance)});
  g.insert({f.gene, s.hasFeature, node});

  g.insert({f.gene, s.causes, f.cancer});
  g.insert({f.gene, s.crossResponsibility, f.cancer});
  g.insert({f.gene, s.hasSignificance, sig});
  g.insert({f.gene, s.hasEvidence, f.evidence});
  for (std::uint64_t k = 1; k <= f.citations; ++k) {
    Term art = ono("Article_" + key + "_" + std::to_string(k));
    g.insert({art, rdfType(), s.article});
    g.insert({f.gene, s.hasCitations, art});
  }
  return node;
}

std::size_t loadAssociations(kg::Graph& g, const std::string& path, std::string_view provenance) {
  const auto& s = schema();
  auto csv = text::readCsvFile(path);
  auto cGene = column(csv, "gene", path);
  auto cCohort = column(csv, "cohort", path);
  auto cSig = column(csv, "significance", path);
  auto cEv = column(csv, "evidence", path);
  auto cCit = column(csv, "citations", path);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto& row = csv.rows[i];
    const std::string where = path + ":" + std::to_string(csv.lines[i]);
    auto sig = parseSignificance(row[cSig]);
    if (!sig) throw ValidationError(where, "unknown significance '" + row[cSig] + "'");
    auto ev = parseEvidence(row[cEv]);
    if (!ev) throw ValidationError(where, "unknown evidence source '" + row[cEv] + "'");
    std::uint64_t citations = 0;
    try {
      std::size_t used = 0;
      long long v = std::stoll(row[cCit], &used);
      if (used != row[cCit].size() || v < 0) throw std::invalid_argument("");
      citations = static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw ValidationError(where, "citations must be a nonnegative integer");
    }
    if (citations == 0) throw ValidationError(where, "an evidence source needs at least one citation");
    try {
      assertAssociation(g, {ono(row[cGene]), ono(row[cCohort]), *sig, s.of(*ev), citations}, provenance);
    } catch (const UnknownNameError& e) {
      throw ValidationError(where, e.what());
    }
  }
  return csv.rows.size();
}

namespace {

void loadBiomarkers(kg::Graph& g, const std::string& path) {
  auto csv = text::readCsvFile(path);
  auto cSym = column(csv, "symbol", path);
  auto cType = column(csv, "type", path);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    auto type = parseGeneType(csv.rows[i][cType]);
    if (!type) {
      throw ValidationError(path + ":" + std::to_string(csv.lines[i]),
                            "unknown gene type '" + csv.rows[i][cType] + "'");
    }
    addBiomarker(g, csv.rows[i][cSym], *type);
  }
}

void loadCohorts(kg::Graph& g, const CohortTable& t) {
  for (const auto& c : t.rows()) addCohort(g, c);
}

}  // namespace

void loadExtension(kg::Graph& g, const std::string& dir, std::string_view provenance) {
  auto p = [&](const char* f) { return (fs::path(dir) / f).string(); };
  if (fs::exists(p("cohorts.csv"))) loadCohorts(g, CohortTable::load(p("cohorts.csv")));
  if (fs::exists(p("biomarkers.csv"))) loadBiomarkers(g, p("biomarkers.csv"));
  if (fs::exists(p("associations.csv"))) loadAssociations(g, p("associations.csv"), provenance);
}

kg::Graph buildSeedOntology(const std::string& dataDir) {
  const auto& s = schema();
  auto p = [&](const char* f) { return (fs::path(dataDir) / f).string(); };
  kg::Graph g;
  assertSchema(g);

  const auto cohortsPath = p("cohorts.csv");
  requireFile(cohortsPath);
  auto cohorts = CohortTable::load(cohortsPath);
  if (cohorts.size() != kCohortTableSize) {
    throw ValidationError(cohortsPath, "expected " + std::to_string(kCohortTableSize) +
                                           " cohorts, found " + std::to_string(cohorts.size()));
  }
  loadCohorts(g, cohorts);
  if (fs::exists(p("cohorts_extra.csv"))) loadCohorts(g, CohortTable::load(p("cohorts_extra.csv")));

  const auto potsfPath = p("potsf_genes.txt");
  requireFile(potsfPath);
  std::size_t potsf = 0;
  for (const auto& line : text::split(text::readFile(potsfPath), '\n')) {
    auto sym = text::trim(line);
    if (sym.empty() || sym[0] == '#') continue;
    addBiomarker(g, sym, GeneType::Potsf);
    ++potsf;
  }
  if (potsf == 0) throw ValidationError(potsfPath, "empty POTSF roster");

  if (fs::exists(p("biomarkers.csv"))) loadBiomarkers(g, p("biomarkers.csv"));

  if (fs::exists(p("memberships.csv"))) {
    auto path = p("memberships.csv");
    auto csv = text::readCsvFile(path);
    auto cInst = column(csv, "instance", path);
    auto cClass = column(csv, "class", path);
    for (const auto& row : csv.rows) g.insert({ono(row[cInst]), rdfType(), ono(row[cClass])});
  }

  if (fs::exists(p("go_associations.csv"))) {
    auto path = p("go_associations.csv");
    auto csv = text::readCsvFile(path);
    auto cGene = column(csv, "gene", path);
    auto cGo = column(csv, "go", path);
    std::map<std::string, int> perGene;
    for (const auto& row : csv.rows) {
      std::string go = row[cGo];
      for (auto& ch : go) {
        if (ch == ':') ch = '_';
      }
      Term f = ono("GOA_" + row[cGene] + "_" + std::to_string(++perGene[row[cGene]]));
      g.insert({ono(row[cGene]), s.hasGOAssociation, f});
      g.insert({f, s.instanceOf, Term::iri(std::string(vocab::kObo) + go)});
    }
  }

  const auto curated = p("associations.csv");
  requireFile(curated);
  loadAssociations(g, curated, "curated");

  auto ext = (fs::path(dataDir) / "extension").string();
  if (fs::is_directory(ext)) loadExtension(g, ext, "extension");
  return g;
}

BiomarkerRecord biomarkerRecord(const kg::Graph& g, const Term& gene) {
  const auto& s = schema();
  BiomarkerRecord r;
  r.symbol = gene.display();
  for (const auto& t : g.match(gene, s.hasType, std::nullopt)) {
    if (auto type = parseGeneType(t.object.display())) {
      r.geneType = *type;
      break;
    }
  }
  for (const auto& t : g.match(gene, s.hasEvidence, std::nullopt)) {
    if (auto ev = parseEvidence(t.object.display())) r.evidenceTypes.insert(*ev);
  }
  r.citations = g.match(gene, s.hasCitations, std::nullopt).size();
  return r;
}

std::string defaultDataDir() {
  if (const char* env = std::getenv("ONOKG_DATA_DIR"); env && *env) return env;
  return ONOKG_DEFAULT_DATA_DIR;
}

}  // namespace onokg::ontology
