#include "onokg/ie/preprocess.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "onokg/common/text.h"

namespace onokg::ie {

namespace {

bool isWordChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80; }

bool endsWithAny(const std::string& w, std::string_view suffix) {
  return w.size() > suffix.size() && w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool hasVowel(std::string_view s) { return s.find_first_of("aeiouy") != std::string_view::npos; }

const std::set<std::string, std::less<>>& stopwords() {
  static const std::set<std::string, std::less<>> words{
      "a",     "about", "above", "after", "again", "all",   "also",   "am",    "an",    "and",   "any",   "are",
      "as",    "at",    "be",    "been",  "being", "both",  "but",    "by",    "can",   "could", "did",   "do",
      "does",  "each",  "few",   "for",   "from",  "had",   "has",    "have",  "having", "he",   "her",   "here",
      "his",   "how",   "i",     "if",    "in",    "into",  "is",     "it",    "its",   "may",   "more",  "most",
      "no",    "nor",   "not",   "of",    "on",    "only",  "or",     "other", "our",   "over",  "same",  "she",
      "should", "so",   "some",  "such",  "than",  "that",  "the",    "their", "them",  "then",  "there", "these",
      "they",  "this",  "those", "through", "to",  "too",   "under",  "until", "up",    "very",  "was",   "we",
      "were",  "what",  "when",  "where", "which", "while", "who",    "whom",  "why",   "will",  "with",  "would",
      "you",   "your"};
  return words;
}

const std::set<std::string, std::less<>> kDeterminers{"a", "an", "the", "this", "that", "these", "those", "each", "any", "some", "all", "both", "no"};
const std::set<std::string, std::less<>> kPronouns{"i", "you", "he", "she", "it", "we", "they", "him", "her", "them", "its", "their", "our", "your", "his", "which", "who", "whom", "what"};
const std::set<std::string, std::less<>> kAdpositions{"of", "in", "on", "at", "by", "for", "from", "to", "with", "into", "through", "over", "under", "about", "above", "after", "as", "via", "between", "among", "within"};
const std::set<std::string, std::less<>> kConjunctions{"and", "or", "but", "nor", "while", "if", "than", "because", "although"};
const std::set<std::string, std::less<>> kAuxiliaries{"is", "are", "was", "were", "be", "been", "being", "am", "has", "have", "had", "do", "does", "did", "can", "could", "may", "might", "will", "would", "should", "must"};
const std::set<std::string, std::less<>> kVerbs{"causes", "cause", "called", "mentioned", "cited", "reported", "associated", "linked", "regulates", "drives", "suppresses", "encodes", "shows", "found", "observed", "involved"};

// Sentence boundary after `.`, `!` or `?` when followed by whitespace and an
// uppercase letter or digit, or by the end of text.
bool sentenceEnd(std::string_view t, std::size_t i) {
  if (t[i] != '.' && t[i] != '!' && t[i] != '?') return false;
  std::size_t j = i + 1;
  if (j >= t.size()) return true;
  if (!std::isspace(static_cast<unsigned char>(t[j]))) return false;
  while (j < t.size() && std::isspace(static_cast<unsigned char>(t[j]))) ++j;
  if (j >= t.size()) return true;
  const unsigned char c = static_cast<unsigned char>(t[j]);
  return std::isupper(c) || std::isdigit(c) || c == '"' || c == '(';
}

}  // namespace

bool isStopword(std::string_view word) { return stopwords().count(text::toLower(word)) > 0; }

std::string stem(std::string_view word) {
  std::string w = text::toLower(word);
  if (w.size() <= 3 || std::any_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return w;
  }
  // Plural and inflectional suffixes first, then derivational ones.
  static const std::array<std::pair<std::string_view, std::string_view>, 5> step1{{
      {"sses", "ss"}, {"ies", "i"}, {"ss", "ss"}, {"us", "us"}, {"s", ""}}};
  for (const auto& [suffix, repl] : step1) {
    if (endsWithAny(w, suffix)) {
      w = w.substr(0, w.size() - suffix.size()) + std::string(repl);
      break;
    }
  }
  static const std::array<std::string_view, 3> step2{"ing", "edly", "ed"};
  for (auto suffix : step2) {
    if (endsWithAny(w, suffix) && hasVowel(std::string_view(w).substr(0, w.size() - suffix.size())) &&
        w.size() - suffix.size() >= 3) {
      w.resize(w.size() - suffix.size());
      break;
    }
  }
  static const std::array<std::pair<std::string_view, std::string_view>, 8> step3{{
      {"ational", "ate"}, {"ization", "ize"}, {"fulness", "ful"}, {"iveness", "ive"},
      {"ality", "al"}, {"ation", "ate"}, {"ness", ""}, {"ly", ""}}};
  for (const auto& [suffix, repl] : step3) {
    if (endsWithAny(w, suffix) && w.size() - suffix.size() >= 3) {
      w = w.substr(0, w.size() - suffix.size()) + std::string(repl);
      break;
    }
  }
  if (w.size() > 4 && w.back() == 'e') w.pop_back();
  return w;
}

std::string coarsePos(std::string_view word, bool sentenceInitial) {
  if (word.empty()) return "PUNCT";
  const auto c0 = static_cast<unsigned char>(word[0]);
  if (!isWordChar(word[0])) return "PUNCT";
  const std::string lw = text::toLower(word);
  if (std::all_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == ','; })) {
    return "NUM";
  }
  if (kDeterminers.count(lw)) return "DET";
  if (kPronouns.count(lw)) return "PRON";
  if (kAdpositions.count(lw)) return "ADP";
  if (kConjunctions.count(lw)) return "CONJ";
  if (kAuxiliaries.count(lw)) return "AUX";
  if (kVerbs.count(lw)) return "VERB";
  const bool hasDigit = std::any_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  const bool upperAfterFirst = std::any_of(word.begin() + 1, word.end(), [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
  if (hasDigit || upperAfterFirst || (std::isupper(c0) && !sentenceInitial)) return "PROPN";
  if (text::endsWith(lw, "ly")) return "ADV";
  if (text::endsWith(lw, "ing") || text::endsWith(lw, "ed") || text::endsWith(lw, "ize") || text::endsWith(lw, "ise")) return "VERB";
  if (text::endsWith(lw, "al") || text::endsWith(lw, "ic") || text::endsWith(lw, "ous") || text::endsWith(lw, "ive") ||
      text::endsWith(lw, "ful") || text::endsWith(lw, "able")) {
    return "ADJ";
  }
  return "NOUN";
}

Document preprocess(std::string_view text, std::string id) {
  Document doc;
  doc.id = std::move(id);
  doc.text = std::string(text);
  Sentence current;
  std::size_t i = 0;
  auto flush = [&] {
    if (!current.empty()) doc.sentences.push_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token tok;
    tok.begin = i;
    if (isWordChar(c)) {
      // Internal hyphens, apostrophes and decimal points stay inside a word.
      std::size_t j = i + 1;
      while (j < text.size()) {
        if (isWordChar(text[j])) {
          ++j;
        } else if ((text[j] == '-' || text[j] == '\'' || text[j] == '.') && j + 1 < text.size() && isWordChar(text[j + 1]) &&
                   !(text[j] == '.' && !std::isdigit(static_cast<unsigned char>(text[j + 1])))) {
          j += 2;
        } else {
          break;
        }
      }
      tok.end = j;
    } else {
      tok.end = i + 1;
    }
    tok.form = std::string(text.substr(tok.begin, tok.end - tok.begin));
    const bool boundary = tok.form.size() == 1 && sentenceEnd(text, tok.begin);
    tok.stem = isWordChar(tok.form[0]) ? stem(tok.form) : tok.form;
    tok.stopword = isStopword(tok.form);
    tok.pos = coarsePos(tok.form, current.empty());
    current.push_back(std::move(tok));
    i = current.back().end;
    if (boundary) flush();
  }
  flush();
  return doc;
}

std::string Document::conll() const {
  std::string out;
  for (const auto& s : sentences) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      const auto& t = s[k];
      out += std::to_string(k + 1) + '\t' + t.form + '\t' + t.stem + '\t' + t.pos + '\t' + (t.stopword ? "1" : "0") + '\n';
    }
    out += '\n';
  }
  return out;
}

std::string normalizeSurface(std::string_view surface) {
  std::string out;
  std::size_t i = 0;
  while (i < surface.size()) {
    while (i < surface.size() && !isWordChar(surface[i])) ++i;
    std::size_t j = i;
    while (j < surface.size() && isWordChar(surface[j])) ++j;
    if (j > i) {
      if (!out.empty()) out += ' ';
      out += stem(surface.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

}  // namespace onokg::ie
