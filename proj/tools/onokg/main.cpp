#include <unistd.h>

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "app.h"
#include "onokg/common/error.h"
#include "onokg/common/text.h"

namespace {

using namespace onokg::cli;

constexpr int kExitOk = 0;
constexpr int kExitUser = 1;
constexpr int kExitIo = 2;

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_st("onokg"));
  spdlog::set_level(spdlog::level::warn);

  CLI::App app{"onokg: oncology knowledge graph construction, querying, explanation and quality assessment"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string configPath, dataDir, kgPath, qualityConfig, checkpoint, corpus;
  double threshold = 0;
  std::uint64_t seed = 0;
  bool verbose = false, quiet = false;
  app.add_option("--config", configPath, "JSON application config (lowest precedence after defaults)");
  auto* oData = app.add_option("--data-dir", dataDir, "bundled data directory");
  auto* oKg = app.add_option("--kg", kgPath, "N-Triples knowledge graph (default: build the seed)");
  auto* oQuality = app.add_option("--quality-config", qualityConfig, "quality assessment config");
  auto* oCheckpoint = app.add_option("--checkpoint,--model", checkpoint, "tagger checkpoint");
  auto* oCorpus = app.add_option("--corpus", corpus, "corpus directory or JSON-lines file");
  auto* oThreshold = app.add_option("--threshold", threshold, "enrichment confidence threshold in [0,1]");
  auto* oSeed = app.add_option("--seed", seed, "seed of every random choice");
  app.add_flag("-v,--verbose", verbose, "log progress to stderr");
  app.add_flag("-q,--quiet", quiet, "log errors only");

  std::string formatName = "table";
  auto addFormat = [&](CLI::App* sub) {
    sub->add_option("--format,-f", formatName, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
  };

  std::string out, queryFile, expression, question, rule, instance, text, inputFile, docId, html, method = "lrp";
  std::string exportFormat = "nt";
  TrainOptions train;
  ExplainOptions explainOpts;

  auto* build = app.add_subcommand("build", "build the seed knowledge graph");
  build->add_option("--out,-o", out, "output N-Triples file")->required();
  addFormat(build);

  auto* ingest = app.add_subcommand("ingest", "extract triples from a corpus and add them to the graph");
  ingest->add_option("--out,-o", out, "output N-Triples file (default: --kg)");
  addFormat(ingest);

  auto* trainCmd = app.add_subcommand("train", "train the entity tagger on the synthetic corpus");
  trainCmd->add_option("--out,-o", out, "checkpoint file")->required();
  trainCmd->add_option("--sentences", train.sentences, "synthetic corpus size")->check(CLI::PositiveNumber);
  trainCmd->add_option("--epochs", train.epochs, "training epochs")->check(CLI::PositiveNumber);
  trainCmd->add_option("--lr", train.learningRate, "learning rate");
  addFormat(trainCmd);

  auto* tag = app.add_subcommand("tag", "recognize gene and disease mentions");
  auto* tagGroup = tag->add_option_group("input");
  tagGroup->add_option("--text", text, "input text");
  tagGroup->add_option("--input,-i", inputFile, "input text file");
  tagGroup->require_option(1);
  addFormat(tag);

  auto* extract = app.add_subcommand("extract", "print the triples extracted from a corpus");
  addFormat(extract);

  auto* query = app.add_subcommand("query", "evaluate a SPARQL SELECT query file");
  query->add_option("query", queryFile, "query file")->required();
  addFormat(query);

  auto* pack = app.add_subcommand("pack", "evaluate every .rq file of a directory");
  pack->add_option("dir", inputFile, "query directory")->required();
  addFormat(pack);

  auto* dlq = app.add_subcommand("dlq", "instances of a class expression");
  dlq->add_option("expression", expression, "class expression")->required();
  addFormat(dlq);

  auto* ask = app.add_subcommand("ask", "answer a question through a class expression");
  ask->add_option("question", question, "question")->required();
  addFormat(ask);

  auto* deduce = app.add_subcommand("deduce", "apply a named rule to an instance");
  deduce->add_option("rule", rule, "rule name")->required();
  deduce->add_option("instance", instance, "instance")->required();
  deduce->add_option("--out,-o", out, "write the graph with the persisted derivation here");

  auto* explainCmd = app.add_subcommand("explain", "relevance heatmap of a document or text");
  auto* explainGroup = explainCmd->add_option_group("input");
  explainGroup->add_option("--doc", docId, "document id in the corpus");
  explainGroup->add_option("--text", text, "input text");
  explainGroup->require_option(1);
  explainCmd->add_option("--method", method, "lrp or sensitivity")->check(CLI::IsMember({"lrp", "sensitivity"}));
  explainCmd->add_option("--epsilon", explainOpts.epsilon, "stabilizer");
  explainCmd->add_option("--delta", explainOpts.delta, "bias share factor");
  explainCmd->add_option("--html", html, "write an HTML heatmap");
  addFormat(explainCmd);

  auto* qa = app.add_subcommand("qa", "quality assessment report");
  addFormat(qa);

  auto* check = app.add_subcommand("check", "ontology pitfall report");
  addFormat(check);

  auto* exportCmd = app.add_subcommand("export", "serialize the graph");
  exportCmd->add_option("--format,-f", exportFormat, "nt, csv or json")->check(CLI::IsMember({"nt", "csv", "json"}));
  exportCmd->add_option("--out,-o", out, "output file (default: stdout)");

  auto* repl = app.add_subcommand("repl", "interactive session");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUser;
  }

  if (verbose) spdlog::set_level(spdlog::level::info);
  if (quiet) spdlog::set_level(spdlog::level::err);

  try {
    AppConfig cfg = AppConfig::defaults();
    if (!configPath.empty()) cfg.applyFile(configPath);
    cfg.applyEnvironment();
    if (oData->count()) cfg.dataDir = dataDir;
    if (oKg->count()) cfg.kgPath = kgPath;
    if (oQuality->count()) cfg.qualityConfig = qualityConfig;
    if (oCheckpoint->count()) cfg.checkpoint = checkpoint;
    if (oCorpus->count()) cfg.corpus = corpus;
    if (oThreshold->count()) cfg.threshold = threshold;
    if (oSeed->count()) cfg.seed = seed;
    cfg.validate();

    Session session(cfg);
    const Format format = parseFormat(formatName);
    auto& o = std::cout;
    if (build->parsed()) {
      cmdBuild(session, out, format, o);
    } else if (ingest->parsed()) {
      cmdIngest(session, cfg.corpusPath(), out, format, o);
    } else if (trainCmd->parsed()) {
      cmdTrain(session, out, train, format, o);
    } else if (tag->parsed()) {
      cmdTag(session, inputFile.empty() ? text : onokg::text::readFile(inputFile), format, o);
    } else if (extract->parsed()) {
      cmdExtract(session, cfg.corpusPath(), format, o);
    } else if (query->parsed()) {
      cmdQuery(session, queryFile, format, o);
    } else if (pack->parsed()) {
      cmdPack(session, inputFile, format, o);
    } else if (dlq->parsed()) {
      cmdDlq(session, expression, format, o);
    } else if (ask->parsed()) {
      cmdAsk(session, question, format, o);
    } else if (deduce->parsed()) {
      cmdDeduce(session, rule, instance, !out.empty(), o);
      if (!out.empty()) cmdExport(session, "nt", out, o);
    } else if (explainCmd->parsed()) {
      explainOpts.method = method == "lrp" ? onokg::explain::Method::Lrp : onokg::explain::Method::Sensitivity;
      explainOpts.htmlPath = html;
      explainOpts.colour = isatty(STDOUT_FILENO) != 0;
      cmdExplain(session, docId, text, explainOpts, format, o);
    } else if (qa->parsed()) {
      cmdQa(session, format, o);
    } else if (check->parsed()) {
      cmdCheck(session, format, o);
    } else if (exportCmd->parsed()) {
      cmdExport(session, exportFormat, out, o);
    } else if (repl->parsed()) {
      return runRepl(session, std::cin, o, isatty(STDIN_FILENO) != 0);
    }
    o.flush();
    return kExitOk;
  } catch (const onokg::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const onokg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  }
}
