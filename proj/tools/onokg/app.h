#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onokg/explain/attribution.h"
#include "onokg/ie/tagger.h"
#include "onokg/kg/graph.h"
#include "onokg/kg/prefixes.h"

namespace onokg::cli {

enum class Format { Table, Csv, Json };

// Throws ValidationError for anything but table, csv or json.
Format parseFormat(const std::string& s);

// Resolved in order: defaults, --config file, ONOKG_* environment, flags.
struct AppConfig {
  std::string dataDir;
  std::optional<std::string> kgPath;          // unset: build the seed from dataDir
  std::map<std::string, std::string> namespaces;  // extra prefixes
  std::string qualityConfig;                  // empty: <dataDir>/quality/config.json
  std::string checkpoint = "onokg-ner.json";
  std::string corpus;                         // empty: <dataDir>/corpus/demo
  double threshold = 0.5;
  std::uint64_t seed = 42;

  static AppConfig defaults();
  // Keys: data_dir, kg, namespaces, quality_config, checkpoint, corpus,
  // threshold, seed.
  void applyJson(const nlohmann::json& j);
  void applyFile(const std::string& path);
  // ONOKG_DATA_DIR, ONOKG_KG, ONOKG_QUALITY_CONFIG, ONOKG_CHECKPOINT,
  // ONOKG_CORPUS, ONOKG_THRESHOLD, ONOKG_SEED.
  void applyEnvironment();
  // Throws IoError for a missing data directory or kg file and
  // ValidationError for a threshold outside [0, 1].
  void validate() const;

  std::string qualityConfigPath() const;
  std::string corpusPath() const;
  nlohmann::json toJson() const;
};

// One graph and at most one model per session, both loaded on first use.
class Session {
 public:
  explicit Session(AppConfig cfg);

  const AppConfig& config() const { return cfg_; }
  kg::Graph& graph();
  const ie::NerModel& model();
  const kg::PrefixTable& prefixes() const { return prefixes_; }
  std::vector<std::string>& history() { return history_; }

 private:
  AppConfig cfg_;
  std::unique_ptr<kg::Graph> graph_;
  std::unique_ptr<ie::NerModel> model_;
  kg::PrefixTable prefixes_;
  std::vector<std::string> history_;
};

// Commands. Each writes its result to `out`, diagnostics go through the
// logger, and failures throw onokg errors that main maps to exit codes.
// The REPL calls the same functions, so both paths print identical text.
void cmdBuild(Session& s, const std::string& outPath, Format f, std::ostream& out);
void cmdQuery(Session& s, const std::string& queryPath, Format f, std::ostream& out);
void cmdQueryText(Session& s, const std::string& query, Format f, std::ostream& out);
void cmdPack(Session& s, const std::string& dir, Format f, std::ostream& out);
void cmdDlq(Session& s, const std::string& expression, Format f, std::ostream& out);
void cmdAsk(Session& s, const std::string& question, Format f, std::ostream& out);
void cmdDeduce(Session& s, const std::string& rule, const std::string& instance, bool persist, std::ostream& out);
void cmdQa(Session& s, Format f, std::ostream& out);
void cmdCheck(Session& s, Format f, std::ostream& out);

struct TrainOptions {
  std::size_t sentences = 2000;
  int epochs = 10;
  double learningRate = 0.05;
  double trainFraction = 0.8;
};
void cmdTrain(Session& s, const std::string& outPath, const TrainOptions& o, Format f, std::ostream& out);
void cmdTag(Session& s, const std::string& text, Format f, std::ostream& out);
void cmdExtract(Session& s, const std::string& corpus, Format f, std::ostream& out);
// Writes the enriched graph to outPath (the kg path when empty).
void cmdIngest(Session& s, const std::string& corpus, const std::string& outPath, Format f, std::ostream& out);

struct ExplainOptions {
  explain::Method method = explain::Method::Lrp;
  double epsilon = explain::kDefaultEpsilon;
  double delta = explain::kDefaultDelta;
  std::string htmlPath;  // written when set
  bool colour = false;   // ANSI backgrounds in table output
};
// Explains the document with id `docId` of the corpus, or `text` when docId
// is empty.
void cmdExplain(Session& s, const std::string& docId, const std::string& text, const ExplainOptions& o, Format f,
                std::ostream& out);
// Formats: nt, csv, json. Writes to outPath, or `out` when empty.
void cmdExport(Session& s, const std::string& format, const std::string& outPath, std::ostream& out);

// Reads commands until :quit or end of input. Returns the exit code.
int runRepl(Session& s, std::istream& in, std::ostream& out, bool interactive);
std::string replHelp();

}  // namespace onokg::cli
