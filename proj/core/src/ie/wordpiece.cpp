#include "onokg/ie/wordpiece.h"

#include <fstream>

#include "onokg/common/error.h"
#include "onokg/common/text.h"

namespace onokg::ie {

SubwordVocab::SubwordVocab(std::vector<std::string> pieces) {
  for (auto& p : pieces) {
    if (!p.empty()) pieces_.insert(std::move(p));
  }
}

SubwordVocab SubwordVocab::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open subword vocabulary");
  std::vector<std::string> pieces;
  std::string line;
  while (std::getline(in, line)) {
    auto t = text::trim(line);
    if (t.empty() || (t[0] == '#' && t.rfind("##", 0) != 0)) continue;  // "##x" is a piece
    pieces.push_back(std::move(t));
  }
  return SubwordVocab(std::move(pieces));
}

std::string SubwordVocab::alphabet() const {
  std::string out;
  for (const auto& p : pieces_) {
    if (p.size() == 1 && contains("##" + p)) out += p;
  }
  return out;
}

std::vector<std::string> wordpieceTokenize(std::string_view word, const SubwordVocab& vocab) {
  const std::string w = text::toLower(word);
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < w.size()) {
    std::size_t end = w.size();
    std::string match;
    while (end > start) {
      std::string piece = (start == 0 ? "" : "##") + w.substr(start, end - start);
      if (vocab.contains(piece)) {
        match = std::move(piece);
        break;
      }
      --end;
    }
    if (match.empty()) return {std::string(SubwordVocab::kUnknown)};
    out.push_back(std::move(match));
    start = end;
  }
  return out;
}

std::string joinPieces(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& p : pieces) out += text::startsWith(p, "##") ? p.substr(2) : p;
  return out;
}

}  // namespace onokg::ie
