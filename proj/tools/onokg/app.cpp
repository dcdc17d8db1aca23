#include "app.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <spdlog/spdlog.h>

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/dl/expression.h"
#include "onokg/dl/qa.h"
#include "onokg/dl/reasoner.h"
#include "onokg/explain/heatmap.h"
#include "onokg/explain/tagger_explain.h"
#include "onokg/ie/corpus.h"
#include "onokg/ie/linking.h"
#include "onokg/ie/pipeline.h"
#include "onokg/ie/preprocess.h"
#include "onokg/ie/relations.h"
#include "onokg/kg/ntriples.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/pitfalls.h"
#include "onokg/ontology/schema.h"
#include "onokg/ontology/seed.h"
#include "onokg/quality/quality.h"
#include "onokg/sparql/evaluator.h"

namespace onokg::cli {

namespace fs = std::filesystem;
using kg::Term;
using nlohmann::json;

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Aligned columns, csv with a header, or {"header":[...],"rows":[[...]]}.
void printRows(const std::vector<std::string>& header, const Rows& rows, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << json{{"header", header}, {"rows", rows}}.dump() << "\n";
    return;
  }
  if (f == Format::Csv) {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << text::csvEscape(r[i]);
      out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += "  ";
      s += r[i];
      if (i + 1 < r.size()) s += std::string(width[i] - r[i].size(), ' ');
    }
    out << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

void printTable(const sparql::SolutionTable& t, Format f, const kg::PrefixTable& prefixes, std::ostream& out) {
  switch (f) {
    case Format::Table: out << t.toText(prefixes); break;
    case Format::Csv: out << t.toCsv(); break;
    case Format::Json: out << t.toJson() << "\n"; break;
  }
}

std::string compact(const kg::PrefixTable& p, const Term& t) {
  return t.isIri() ? p.compact(t.lexical()) : t.display();
}

std::string envOr(const char* name) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : std::string();
}

Term resolveIndividual(const Session& s, kg::Graph& g, const std::string& name) {
  Term t;
  try {
    t = name.find(':') != std::string::npos ? s.prefixes().expand(name) : ontology::ono(name);
  } catch (const ValidationError&) {
    throw UnknownNameError("individual", name);
  }
  if (!g.lookup(t)) throw UnknownNameError("individual", name);
  return t;
}

ie::Linker makeLinker(const Session& s, const kg::Graph& g) {
  const auto aliases = (fs::path(s.config().dataDir) / "aliases.csv").string();
  return ie::Linker(g, fs::exists(aliases) ? ie::AliasTable::load(aliases, s.prefixes()) : ie::AliasTable{});
}

std::vector<ie::Document> loadCorpus(const std::string& path, std::vector<std::string>* skipped) {
  return ie::loadDocuments(path, skipped);
}

}  // namespace

Format parseFormat(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ValidationError("--format", "unknown output format '" + s + "' (table, csv, json)");
}

// ---- configuration ---------------------------------------------------------

AppConfig AppConfig::defaults() {
  AppConfig c;
  c.dataDir = ontology::defaultDataDir();
  return c;
}

void AppConfig::applyJson(const json& j) {
  if (!j.is_object()) throw ValidationError("--config", "config must be a JSON object");
  try {
    if (j.contains("data_dir")) dataDir = j.at("data_dir").get<std::string>();
    if (j.contains("kg")) kgPath = j.at("kg").get<std::string>();
    if (j.contains("namespaces")) {
      for (const auto& [k, v] : j.at("namespaces").items()) namespaces[k] = v.get<std::string>();
    }
    if (j.contains("quality_config")) qualityConfig = j.at("quality_config").get<std::string>();
    if (j.contains("checkpoint")) checkpoint = j.at("checkpoint").get<std::string>();
    if (j.contains("corpus")) corpus = j.at("corpus").get<std::string>();
    if (j.contains("threshold")) threshold = j.at("threshold").get<double>();
    if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ValidationError("--config", std::string("malformed config: ") + e.what());
  }
}

void AppConfig::applyFile(const std::string& path) {
  json j;
  try {
    j = json::parse(text::readFile(path));
  } catch (const json::parse_error& e) {
    throw SyntaxError(0, e.byte, "config " + path + ": " + e.what());
  }
  applyJson(j);
}

void AppConfig::applyEnvironment() {
  if (auto v = envOr("ONOKG_DATA_DIR"); !v.empty()) dataDir = v;
  if (auto v = envOr("ONOKG_KG"); !v.empty()) kgPath = v;
  if (auto v = envOr("ONOKG_QUALITY_CONFIG"); !v.empty()) qualityConfig = v;
  if (auto v = envOr("ONOKG_CHECKPOINT"); !v.empty()) checkpoint = v;
  if (auto v = envOr("ONOKG_CORPUS"); !v.empty()) corpus = v;
  if (auto v = envOr("ONOKG_THRESHOLD"); !v.empty()) {
    try {
      std::size_t used = 0;
      threshold = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw ValidationError("ONOKG_THRESHOLD", "not a number: '" + v + "'");
    }
  }
  if (auto v = envOr("ONOKG_SEED"); !v.empty()) {
    try {
      std::size_t used = 0;
      seed = std::stoull(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw ValidationError("ONOKG_SEED", "not an unsigned integer: '" + v + "'");
    }
  }
}

void AppConfig::validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw ValidationError("threshold", "must lie in [0, 1], got " + fixed(threshold, 4));
  }
  if (!fs::is_directory(dataDir)) throw IoError(dataDir, "data directory not found");
  if (kgPath && !fs::exists(*kgPath)) throw IoError(*kgPath, "knowledge graph file not found");
}

std::string AppConfig::qualityConfigPath() const {
  return qualityConfig.empty() ? (fs::path(dataDir) / "quality" / "config.json").string() : qualityConfig;
}

std::string AppConfig::corpusPath() const {
  return corpus.empty() ? (fs::path(dataDir) / "corpus" / "demo").string() : corpus;
}

json AppConfig::toJson() const {
  json j{{"data_dir", dataDir},        {"namespaces", namespaces}, {"quality_config", qualityConfigPath()},
         {"checkpoint", checkpoint},   {"corpus", corpusPath()},   {"threshold", threshold},
         {"seed", seed}};
  j["kg"] = kgPath ? json(*kgPath) : json(nullptr);
  return j;
}

// ---- session -----------------------------------------------------------------

Session::Session(AppConfig cfg) : cfg_(std::move(cfg)), prefixes_(kg::PrefixTable::standard()) {
  for (const auto& [k, v] : cfg_.namespaces) prefixes_.add(k, v);
}

kg::Graph& Session::graph() {
  if (!graph_) {
    auto g = std::make_unique<kg::Graph>();
    if (cfg_.kgPath) {
      kg::NTriplesLoadResult r;
      kg::loadNTriplesFile(*cfg_.kgPath, *g, &r);
      if (!r.ok()) {
        const auto& e = r.errors.front();
        throw SyntaxError(e.line, 1, *cfg_.kgPath + ": " + e.message);
      }
    } else {
      *g = ontology::buildSeedOntology(cfg_.dataDir);
    }
    graph_ = std::move(g);
  }
  return *graph_;
}

const ie::NerModel& Session::model() {
  if (!model_) {
    if (!fs::exists(cfg_.checkpoint)) {
      throw IoError(cfg_.checkpoint, "tagger checkpoint not found (create one with 'onokg train --out')");
    }
    model_ = std::make_unique<ie::NerModel>(ie::NerModel::load(cfg_.checkpoint));
  }
  return *model_;
}

// ---- knowledge graph commands ------------------------------------------------

void cmdBuild(Session& s, const std::string& outPath, Format f, std::ostream& out) {
  const auto g = ontology::buildSeedOntology(s.config().dataDir);
  kg::saveNTriplesFile(outPath, g);
  const auto& o = ontology::schema();
  const Term type = Term::iri(vocab::kRdfType);
  std::set<Term> classes, individuals, potsf;
  for (const auto& t : g.match(std::nullopt, type, Term::iri(vocab::kOwlClass))) classes.insert(t.subject);
  for (const auto& t : g.match(std::nullopt, type, std::nullopt)) {
    if (t.object.lexical().rfind(vocab::kOwl, 0) != 0 && t.object.lexical().rfind(vocab::kRdf, 0) != 0) {
      individuals.insert(t.subject);
    }
  }
  for (const auto& t : g.match(std::nullopt, o.hasType, o.potsf)) potsf.insert(t.subject);
  const auto cancers = dl::instances(g, *dl::ClassExpression::atomic(o.cancer));
  printRows({"statistic", "value"},
            {{"triples", std::to_string(g.size())},
             {"classes", std::to_string(classes.size())},
             {"typed_instances", std::to_string(individuals.size())},
             {"potsf_biomarkers", std::to_string(potsf.size())},
             {"cancers", std::to_string(cancers.size())}},
            f, out);
}

void cmdQueryText(Session& s, const std::string& query, Format f, std::ostream& out) {
  if (text::trim(query).empty()) throw sparql::QueryError(sparql::QueryErrorKind::Syntax, 1, 1, "empty query");
  const auto q = sparql::parseSelect(query);
  printTable(sparql::evaluate(s.graph(), q), f, s.prefixes(), out);
}

void cmdQuery(Session& s, const std::string& queryPath, Format f, std::ostream& out) {
  cmdQueryText(s, text::readFile(queryPath), f, out);
}

void cmdPack(Session& s, const std::string& dir, Format f, std::ostream& out) {
  const auto results = sparql::runQueryPack(s.graph(), dir);
  if (f == Format::Json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back({{"id", r.id}, {"result", json::parse(r.table.toJson())}});
    out << arr.dump() << "\n";
    return;
  }
  for (const auto& r : results) {
    out << "# " << r.id << " (" << r.table.rows.size() << " rows)\n";
    printTable(r.table, f, s.prefixes(), out);
  }
}

void cmdDlq(Session& s, const std::string& expression, Format f, std::ostream& out) {
  auto& g = s.graph();
  const auto e = dl::parseDlx(expression, g, s.prefixes());
  const auto found = dl::instances(g, *e);
  if (f == Format::Json) {
    json names = json::array();
    for (const auto& t : found) names.push_back(t.lexical());
    out << json{{"expression", e->toString()}, {"count", found.size()}, {"instances", names}}.dump() << "\n";
    return;
  }
  Rows rows;
  for (const auto& t : found) rows.push_back({f == Format::Csv ? t.lexical() : compact(s.prefixes(), t)});
  printRows({"instance"}, rows, f, out);
  if (f == Format::Table) out << "(" << found.size() << " instances)\n";
}

void cmdAsk(Session& s, const std::string& question, Format f, std::ostream& out) {
  auto& g = s.graph();
  const auto a = dl::answerQuestion(g, question);
  if (f == Format::Table) out << "query: " << a.expression << "\n";
  Rows rows;
  for (const auto& t : a.answers) rows.push_back({f == Format::Csv ? t.lexical() : compact(s.prefixes(), t)});
  if (f == Format::Json) {
    json names = json::array();
    for (const auto& t : a.answers) names.push_back(t.lexical());
    out << json{{"question", question}, {"expression", a.expression}, {"answers", names}}.dump() << "\n";
    return;
  }
  printRows({"answer"}, rows, f, out);
  if (f == Format::Table) out << "(" << a.answers.size() << " answers)\n";
}

void cmdDeduce(Session& s, const std::string& ruleName, const std::string& instance, bool persist, std::ostream& out) {
  const auto rule = dl::namedRule(ruleName);
  if (!rule) throw UnknownNameError("rule", ruleName);
  auto& g = s.graph();
  const auto d = dl::deduceSyllogism(g, *rule, resolveIndividual(s, g, instance));
  out << dl::formatTrace(d);
  if (persist && d.ok()) dl::persistDerivation(g, d);
}

void cmdQa(Session& s, Format f, std::ostream& out) {
  const auto cfg = quality::QualityConfig::load(s.config().qualityConfigPath());
  const auto r = quality::assess(s.graph(), cfg);
  if (f == Format::Json) {
    out << r.toJson().dump(2) << "\n";
  } else if (f == Format::Table) {
    out << r.toTable();
  } else {
    Rows rows;
    for (const auto& m : r.metrics) {
      rows.push_back({m.name, m.dimension, m.kind == quality::MetricKind::Ratio ? "ratio" : "count",
                      m.status == quality::MetricStatus::Ok ? "ok" : "skipped", std::to_string(m.numerator),
                      std::to_string(m.denominator), m.ratio ? fixed(*m.ratio, 6) : "", m.vacuous ? "true" : "false"});
    }
    printRows({"metric", "dimension", "kind", "status", "numerator", "denominator", "ratio", "vacuous"}, rows, f, out);
  }
}

void cmdCheck(Session& s, Format f, std::ostream& out) {
  const auto r = ontology::checkOntologyPitfalls(s.graph());
  Rows rows;
  for (const auto& c : r.cycles) {
    std::string members;
    for (const auto& t : c) members += (members.empty() ? "" : " ") + compact(s.prefixes(), t);
    rows.push_back({"hierarchy_cycle", members});
  }
  for (const auto& n : r.naming) {
    rows.push_back({"naming", n.kind + " " + compact(s.prefixes(), n.element) + " should be " + n.expected});
  }
  for (const auto& i : r.intersections) {
    std::string classes;
    for (const auto& t : i.classes) classes += (classes.empty() ? "" : " ") + compact(s.prefixes(), t);
    rows.push_back({"disjoint_intersection", compact(s.prefixes(), i.property) + " " + i.role + ": " + classes});
  }
  printRows({"pitfall", "detail"}, rows, f, out);
  if (f == Format::Table) out << "(" << r.total() << " findings)\n";
}

// ---- extraction commands -----------------------------------------------------

void cmdTrain(Session& s, const std::string& outPath, const TrainOptions& o, Format f, std::ostream& out) {
  const auto& dataDir = s.config().dataDir;
  const auto lex = ie::NerLexicon::fromDataDir(dataDir);
  auto [train, test] = ie::splitCorpus(ie::syntheticCorpus(lex, o.sentences, s.config().seed), o.trainFraction,
                                       s.config().seed);
  ie::TrainConfig cfg;
  cfg.epochs = o.epochs;
  cfg.learningRate = o.learningRate;
  cfg.seed = s.config().seed;
  cfg.validate();
  ie::NerModel model(ie::SubwordVocab::load((fs::path(dataDir) / "ner" / "demo_vocab.txt").string()), lex.gazetteer(),
                     cfg);
  model.train(train);
  model.save(outPath);
  const auto scores = ie::evaluateNer(model, test);
  Rows rows = {{"train_sentences", std::to_string(train.size())},
               {"test_sentences", std::to_string(test.size())},
               {"precision", fixed(scores.precision(), 4)},
               {"recall", fixed(scores.recall(), 4)},
               {"f1", fixed(scores.f1(), 4)}};
  for (const auto& [type, curve] : model.lossCurves) {
    std::string c;
    for (double v : curve) c += (c.empty() ? "" : " ") + fixed(v, 8);
    rows.push_back({"loss_" + std::string(ie::entityTypeName(type)), c});
  }
  printRows({"statistic", "value"}, rows, f, out);
}

void cmdTag(Session& s, const std::string& input, Format f, std::ostream& out) {
  const auto& m = s.model();
  const auto doc = ie::preprocess(input, "input");
  Rows rows;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    for (const auto& e : m.recognize(doc.sentences[i], doc.text, doc.id, i)) {
      rows.push_back({std::to_string(i), std::to_string(e.span.begin), std::to_string(e.span.end), e.surface,
                      std::string(ie::entityTypeName(e.type)), fixed(e.score, 4)});
    }
  }
  printRows({"sentence", "begin", "end", "surface", "type", "score"}, rows, f, out);
}

void cmdExtract(Session& s, const std::string& corpus, Format f, std::ostream& out) {
  const auto& m = s.model();
  auto& g = s.graph();
  std::vector<std::string> skipped;
  auto docs = loadCorpus(corpus, &skipped);
  const auto linker = makeLinker(s, g);
  const ie::RuleRelationClassifier classifier;
  Rows rows;
  for (const auto& d : docs) {
    for (const auto& t : ie::analyzeDocument(d, m, linker, classifier).triples) {
      rows.push_back({t.docId, std::to_string(t.sentence), compact(s.prefixes(), t.triple.subject),
                      compact(s.prefixes(), t.triple.predicate), compact(s.prefixes(), t.triple.object),
                      fixed(t.confidence, 2)});
    }
  }
  printRows({"document", "sentence", "subject", "predicate", "object", "confidence"}, rows, f, out);
}

void cmdIngest(Session& s, const std::string& corpus, const std::string& outPath, Format f, std::ostream& out) {
  const std::string target = !outPath.empty() ? outPath : s.config().kgPath.value_or("");
  if (target.empty()) throw ValidationError("--out", "ingest needs --out or --kg to know where to write the graph");
  auto& g = s.graph();
  std::vector<std::string> skipped;
  auto docs = loadCorpus(corpus, &skipped);
  ie::EnrichmentReport report;
  if (!docs.empty()) {
    const auto linker = makeLinker(s, g);
    report = ie::enrichFromDocuments(g, std::move(docs), s.model(), linker, ie::RuleRelationClassifier{},
                                     s.config().threshold);
  }
  report.skippedDocuments = skipped;
  kg::saveNTriplesFile(target, g);
  if (f == Format::Json) {
    out << report.toJson().dump() << "\n";
    return;
  }
  if (f == Format::Csv) {
    printRows({"documents", "skipped", "proposed", "accepted", "rejected", "duplicates", "inserted"},
              {{std::to_string(report.documents), std::to_string(skipped.size()), std::to_string(report.proposed),
                std::to_string(report.accepted), std::to_string(report.rejected), std::to_string(report.duplicates),
                std::to_string(report.inserted)}},
              f, out);
    return;
  }
  out << report.toText();
  for (const auto& id : skipped) out << "skipped " << id << "\n";
  for (const auto& t : report.insertedTriples) {
    out << "inserted " << compact(s.prefixes(), t.triple.subject) << " " << compact(s.prefixes(), t.triple.predicate)
        << " " << compact(s.prefixes(), t.triple.object) << " [" << t.docId << "]\n";
  }
}

void cmdExplain(Session& s, const std::string& docId, const std::string& input, const ExplainOptions& o, Format f,
                std::ostream& out) {
  const auto& m = s.model();
  ie::Document doc;
  if (!docId.empty()) {
    bool found = false;
    for (auto& d : loadCorpus(s.config().corpusPath(), nullptr)) {
      if (d.id == docId) {
        doc = std::move(d);
        found = true;
        break;
      }
    }
    if (!found) throw UnknownNameError("document", docId);
  } else {
    doc = ie::preprocess(input, "input");
  }
  json dumps = json::array();
  Rows rows;
  std::string html;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    const auto ex = explain::explainSentence(m, doc.sentences[i], doc.text, o.method, o.epsilon, o.delta);
    const auto h = explain::makeHeatmap(ex.words, ex.scores);
    if (f == Format::Table) out << "sentence " << i << ":\n" << explain::renderTerminal(h, o.colour);
    if (f == Format::Csv) {
      for (std::size_t k = 0; k < h.tokens.size(); ++k) {
        rows.push_back({std::to_string(i), h.tokens[k], fixed(h.raw[k], 8), fixed(h.intensity[k], 6)});
      }
    }
    auto j = explain::relevanceJson(h, o.method, o.epsilon, o.delta);
    j["document"] = doc.id;
    j["sentence"] = i;
    dumps.push_back(j);
    if (!o.htmlPath.empty()) html += explain::renderHtml(h, doc.id + " sentence " + std::to_string(i));
  }
  if (f == Format::Csv) printRows({"sentence", "token", "score", "intensity"}, rows, f, out);
  if (f == Format::Json) out << dumps.dump() << "\n";
  if (!o.htmlPath.empty()) text::writeFile(o.htmlPath, html);
}

void cmdExport(Session& s, const std::string& format, const std::string& outPath, std::ostream& out) {
  const auto& g = s.graph();
  std::string body;
  if (format == "nt") {
    body = kg::serializeNTriples(g);
  } else if (format == "csv") {
    body = "subject,predicate,object\n";
    for (const auto& t : g.all()) {
      body += text::csvEscape(t.subject.toNTriples()) + "," + text::csvEscape(t.predicate.toNTriples()) + "," +
              text::csvEscape(t.object.toNTriples()) + "\n";
    }
  } else if (format == "json") {
    json arr = json::array();
    for (const auto& t : g.all()) {
      arr.push_back({{"subject", t.subject.toNTriples()}, {"predicate", t.predicate.toNTriples()},
                     {"object", t.object.toNTriples()}});
    }
    body = arr.dump() + "\n";
  } else {
    throw ValidationError("--format", "unknown export format '" + format + "' (nt, csv, json)");
  }
  if (outPath.empty()) {
    out << body;
  } else {
    text::writeFile(outPath, body);
  }
}

}  // namespace onokg::cli
