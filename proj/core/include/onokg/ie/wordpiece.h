#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace onokg::ie {

// Subword inventory. Continuation pieces carry a "##" prefix. Matching is on
// the lowercased word.
class SubwordVocab {
 public:
  static constexpr std::string_view kUnknown = "[UNK]";

  SubwordVocab() = default;
  explicit SubwordVocab(std::vector<std::string> pieces);

  // One piece per line; blank lines and lines starting with a single '#'
  // are skipped.
  static SubwordVocab load(const std::string& path);

  bool contains(std::string_view piece) const { return pieces_.count(piece) > 0; }
  std::size_t size() const { return pieces_.size(); }
  const std::set<std::string, std::less<>>& pieces() const { return pieces_; }

  // Characters c for which both "c" and "##c" are pieces.
  std::string alphabet() const;

 private:
  std::set<std::string, std::less<>> pieces_;
};

// Greedy longest-match-first segmentation. A word with a position no piece
// matches becomes the single unknown marker.
std::vector<std::string> wordpieceTokenize(std::string_view word, const SubwordVocab& vocab);

// Concatenation of the pieces with "##" markers removed.
std::string joinPieces(const std::vector<std::string>& pieces);

}  // namespace onokg::ie
