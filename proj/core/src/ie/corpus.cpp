#include "onokg/ie/corpus.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include <nlohmann/json.hpp>

#include <spdlog/spdlog.h>

#include "onokg/common/error.h"
#include "onokg/common/text.h"

namespace onokg::ie {

namespace fs = std::filesystem;

std::vector<Token> LabeledSentence::tokens() const {
  std::vector<Token> out;
  for (auto& s : preprocess(text).sentences) {
    for (auto& t : s) out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::pair<WordSpan, EntityType>> LabeledSentence::wordSpans() const {
  const auto toks = tokens();
  std::vector<std::pair<WordSpan, EntityType>> out;
  for (const auto& m : mentions) {
    std::size_t b = toks.size(), e = 0;
    for (std::size_t w = 0; w < toks.size(); ++w) {
      if (toks[w].begin >= m.begin && toks[w].end <= m.end) {
        b = std::min(b, w);
        e = std::max(e, w + 1);
      }
    }
    if (b >= e || toks[b].begin != m.begin || toks[e - 1].end != m.end) {
      throw ValidationError("mention [" + std::to_string(m.begin) + "," + std::to_string(m.end) + ")",
                            "does not align with token boundaries in '" + text + "'");
    }
    out.push_back({{b, e}, m.type});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::string> readLines(const std::string& path) {
  std::vector<std::string> out;
  for (auto& line : text::split(text::readFile(path), '\n')) {
    auto t = text::trim(line);
    if (!t.empty() && t[0] != '#') out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> csvColumn(const std::string& path, std::size_t column) {
  std::vector<std::string> out;
  for (const auto& row : text::readCsvFile(path).rows) {
    if (column < row.size() && !row[column].empty()) out.push_back(row[column]);
  }
  return out;
}

void appendUnique(std::vector<std::string>& to, const std::vector<std::string>& from) {
  std::set<std::string> seen(to.begin(), to.end());
  for (const auto& s : from) {
    if (seen.insert(s).second) to.push_back(s);
  }
}

}  // namespace

NerLexicon NerLexicon::fromDataDir(const std::string& dataDir) {
  const fs::path d(dataDir);
  NerLexicon lex;
  appendUnique(lex.genes, readLines((d / "potsf_genes.txt").string()));
  appendUnique(lex.genes, csvColumn((d / "biomarkers.csv").string(), 0));
  if (fs::exists(d / "extension" / "biomarkers.csv")) appendUnique(lex.genes, csvColumn((d / "extension" / "biomarkers.csv").string(), 0));
  appendUnique(lex.genes, {"TP53"});
  appendUnique(lex.diseases, csvColumn((d / "cohorts.csv").string(), 1));
  if (fs::exists(d / "cohorts_extra.csv")) appendUnique(lex.diseases, csvColumn((d / "cohorts_extra.csv").string(), 1));
  appendUnique(lex.diseases, readLines((d / "ner" / "diseases.txt").string()));
  lex.geneTypes = {"POTSF", "Oncogene", "ProteinCoding"};
  lex.evidence = {"PubMed", "MeSH", "CancerIndex"};
  return lex;
}

Gazetteer NerLexicon::gazetteer() const {
  Gazetteer g;
  for (const auto& s : genes) g.add(s, EntityType::Gene);
  for (const auto& s : diseases) g.add(s, EntityType::Disease);
  return g;
}

namespace {

// Slots: {G} {G2} gene, {D} {D2} disease, {T} gene type, {E} evidence.
const std::vector<std::string>& templates() {
  static const std::vector<std::string> t = {
      "{G} is responsible for a disease called {D}.",
      "{G} has {T} functionality, which is mentioned in numerous {E} articles.",
      "Mutations in {G} are frequently observed in {D}.",
      "{G} causes {D} in a subset of patients.",
      "Expression of {G} is associated with {D} progression.",
      "The {G} gene is a known {T} in {D}.",
      "{D} patients often carry {G} alterations.",
      "Loss of {G} function has been reported in {D} and {D2}.",
      "{G} and {G2} are cited in {E} as drivers of {D}.",
      "Recent studies link {G} to {D}.",
      "Overexpression of {G} drives tumor growth in {D}.",
      "In {D}, {G} acts as a {T}.",
      "We found no association between {G} and {D}.",
      "{G} signaling is altered in {D} according to {E} records.",
      "Several {E} articles describe {G} in {D}.",
      "Patients with {D} showed elevated {G} levels.",
      "The role of {G} in {D} is well documented.",
      "Amplification of {G} was detected in {D} samples.",
      "{G} interacts with {G2} in cells derived from {D}.",
      "Tumor samples from {D} were screened for variants.",
      "{D} is a disease with a poor prognosis.",
      "The protein encoded by {G} regulates the cell cycle.",
  };
  return t;
}

template <class Rng>
const std::string& pick(const std::vector<std::string>& v, Rng& rng) {
  if (v.empty()) throw ValidationError("lexicon", "empty slot list");
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

// Gene-like symbol outside every gazetteer, so the tagger has to learn from
// shape and context as well.
template <class Rng>
std::string unseenSymbol(Rng& rng) {
  std::uniform_int_distribution<int> letters(2, 4), digits(1, 3), letter(0, 25), digit(0, 9);
  std::string out = "Z";
  for (int k = letters(rng) - 1; k > 0; --k) out += static_cast<char>('A' + letter(rng));
  for (int k = digits(rng); k > 0; --k) out += static_cast<char>('0' + digit(rng));
  return out;
}

}  // namespace

std::vector<LabeledSentence> syntheticCorpus(const NerLexicon& lexicon, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> tpl(0, templates().size() - 1);
  std::vector<LabeledSentence> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const std::string& t = templates()[tpl(rng)];
    std::bernoulli_distribution unseen(0.15);
    const std::string g1 = unseen(rng) ? unseenSymbol(rng) : pick(lexicon.genes, rng);
    std::string g2 = pick(lexicon.genes, rng);
    if (g2 == g1) g2 = lexicon.genes.front() == g1 ? lexicon.genes.back() : lexicon.genes.front();
    const std::string d1 = pick(lexicon.diseases, rng);
    std::string d2 = pick(lexicon.diseases, rng);
    if (d2 == d1) d2 = lexicon.diseases.front() == d1 ? lexicon.diseases.back() : lexicon.diseases.front();
    const std::string ty = pick(lexicon.geneTypes, rng);
    const std::string ev = pick(lexicon.evidence, rng);
    LabeledSentence ls;
    std::size_t i = 0;
    while (i < t.size()) {
      if (t[i] != '{') {
        ls.text += t[i++];
        continue;
      }
      const auto close = t.find('}', i);
      const std::string slot = t.substr(i + 1, close - i - 1);
      i = close + 1;
      const std::string* fill = nullptr;
      std::optional<EntityType> type;
      if (slot == "G") fill = &g1, type = EntityType::Gene;
      else if (slot == "G2") fill = &g2, type = EntityType::Gene;
      else if (slot == "D") fill = &d1, type = EntityType::Disease;
      else if (slot == "D2") fill = &d2, type = EntityType::Disease;
      else if (slot == "T") fill = &ty;
      else fill = &ev;
      if (type) ls.mentions.push_back({ls.text.size(), ls.text.size() + fill->size(), *type});
      ls.text += *fill;
    }
    out.push_back(std::move(ls));
  }
  return out;
}

std::pair<std::vector<LabeledSentence>, std::vector<LabeledSentence>> splitCorpus(std::vector<LabeledSentence> corpus,
                                                                                  double trainFraction, std::uint64_t seed) {
  if (!(trainFraction >= 0 && trainFraction <= 1)) throw ValidationError("train_fraction", "must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::shuffle(corpus.begin(), corpus.end(), rng);
  const auto cut = static_cast<std::size_t>(trainFraction * static_cast<double>(corpus.size()) + 0.5);
  std::vector<LabeledSentence> train(corpus.begin(), corpus.begin() + static_cast<long>(cut));
  std::vector<LabeledSentence> test(corpus.begin() + static_cast<long>(cut), corpus.end());
  return {std::move(train), std::move(test)};
}

std::vector<LabeledSentence> loadConll(const std::string& path) {
  std::vector<LabeledSentence> out;
  LabeledSentence cur;
  std::optional<GoldMention> open;
  auto closeMention = [&] {
    if (open) cur.mentions.push_back(*open);
    open.reset();
  };
  auto flush = [&] {
    closeMention();
    if (!cur.text.empty()) out.push_back(std::move(cur));
    cur = {};
  };
  std::size_t lineNo = 0;
  for (const auto& raw : text::split(text::readFile(path), '\n')) {
    ++lineNo;
    const auto line = text::trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    const auto cols = text::split(line, '\t');
    if (cols.size() < 2) throw SyntaxError(lineNo, 1, "expected 'word<TAB>tag'");
    const std::string& word = cols.front();
    const std::string& tag = cols.back();
    if (!cur.text.empty()) cur.text += ' ';
    const std::size_t b = cur.text.size();
    cur.text += word;
    if (tag == "O") {
      closeMention();
      continue;
    }
    if (tag.size() < 3 || (tag[0] != 'B' && tag[0] != 'I') || tag[1] != '-') throw SyntaxError(lineNo, word.size() + 2, "bad tag '" + tag + "'");
    auto type = parseEntityType(tag.substr(2));
    if (!type) throw SyntaxError(lineNo, word.size() + 4, "unknown entity type '" + tag.substr(2) + "'");
    if (tag[0] == 'I' && open && open->type == *type) {
      open->end = cur.text.size();
    } else {
      closeMention();
      open = GoldMention{b, cur.text.size(), *type};
    }
  }
  flush();
  return out;
}

std::string toConll(const std::vector<LabeledSentence>& corpus) {
  std::string out;
  for (const auto& ls : corpus) {
    const auto toks = ls.tokens();
    std::vector<std::string> tags(toks.size(), "O");
    for (const auto& [sp, type] : ls.wordSpans()) {
      for (std::size_t w = sp.begin; w < sp.end; ++w) tags[w] = std::string(w == sp.begin ? "B-" : "I-") + std::string(entityTypeName(type));
    }
    for (std::size_t w = 0; w < toks.size(); ++w) out += toks[w].form + "\t" + tags[w] + "\n";
    out += "\n";
  }
  return out;
}

std::vector<Document> loadDocuments(const std::string& path, std::vector<std::string>* skipped) {
  std::vector<Document> out;
  const fs::path p(path);
  auto skip = [&](const std::string& id, const Error& e) {
    if (!skipped) throw;
    spdlog::warn("skipping document {}: {}", id, e.what());
    skipped->push_back(id);
  };
  if (fs::is_directory(p)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(p)) {
      if (!e.is_directory() && e.path().extension() == ".txt") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        out.push_back(preprocess(text::readFile(f.string()), f.stem().string()));
      } catch (const Error& e) {
        skip(f.stem().string(), e);
      }
    }
    return out;
  }
  if (!fs::exists(p)) throw IoError(path, "no such corpus file or directory");
  std::size_t lineNo = 0;
  for (const auto& line : text::split(text::readFile(path), '\n')) {
    ++lineNo;
    if (text::trim(line).empty()) continue;
    try {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(lineNo, 1, std::string("malformed JSON line: ") + e.what());
      }
      if (!j.is_object() || !j.contains("text") || !j["text"].is_string()) throw SyntaxError(lineNo, 1, "expected an object with a string 'text'");
      std::string id = j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : "doc" + std::to_string(lineNo);
      out.push_back(preprocess(j["text"].get<std::string>(), std::move(id)));
    } catch (const SyntaxError& e) {
      skip("line " + std::to_string(lineNo), e);
    }
  }
  return out;
}

}  // namespace onokg::ie
