#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace onokg::ie {

struct Token {
  std::string form;
  std::string stem;
  std::string pos;  // coarse tag: NOUN PROPN VERB AUX ADJ ADV ADP DET PRON CONJ NUM PUNCT
  bool stopword = false;
  std::size_t begin = 0, end = 0;  // byte offsets into the document text
};

using Sentence = std::vector<Token>;

struct Document {
  std::string id;
  std::string text;
  std::vector<Sentence> sentences;

  // One token per line (index, form, stem, pos, stopword flag), tab
  // separated, with a blank line after each sentence.
  std::string conll() const;
};

// Sentence split, tokenization, stemming, stopword flags and coarse PoS.
// Deterministic: equal text gives equal tokens.
Document preprocess(std::string_view text, std::string id = "");

// Suffix-stripping stem of the lowercased word.
std::string stem(std::string_view word);
bool isStopword(std::string_view word);
std::string coarsePos(std::string_view word, bool sentenceInitial);

// Lowercased, stemmed tokens joined by single spaces ("Breast Cancers" ->
// "breast cancer"); used as the key of every surface-form table.
std::string normalizeSurface(std::string_view surface);

}  // namespace onokg::ie
