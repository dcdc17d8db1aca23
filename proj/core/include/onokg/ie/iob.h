#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onokg/ie/preprocess.h"
#include "onokg/ie/wordpiece.h"
#include "onokg/kg/term.h"

namespace onokg::ie {

// Tag set of the sequence tagger. Index order is the row order of the
// output layer.
enum class Tag : int { B = 0, I = 1, O = 2, X = 3, Cls = 4, Sep = 5, Pad = 6 };
inline constexpr int kNumTags = 7;
using TagDistribution = std::array<double, kNumTags>;

std::string_view tagName(Tag t);  // "B" "I" "O" "X" "[CLS]" "[SEP]" "PAD"
std::optional<Tag> parseTag(std::string_view s);

// Alphabetical order; ties between types resolve to the smaller value.
enum class EntityType { Disease, Gene };
std::string_view entityTypeName(EntityType t);
std::optional<EntityType> parseEntityType(std::string_view s);

// A sentence as the tagger sees it: [CLS], the subword pieces of each word,
// [SEP]. wordOf is -1 for the two special positions.
struct EncodedSentence {
  std::vector<std::string> words;
  std::vector<std::string> pieces;
  std::vector<int> wordOf;
  std::vector<bool> continuation;  // piece is not the first of its word

  std::size_t size() const { return pieces.size(); }
};

// A word needing more than maxPiecesPerWord pieces is encoded as the single
// unknown marker.
EncodedSentence encodeWords(const std::vector<std::string>& words, const SubwordVocab& vocab,
                            std::size_t maxPiecesPerWord = static_cast<std::size_t>(-1));

// Half-open word range.
struct WordSpan {
  std::size_t begin = 0, end = 0;
  friend auto operator<=>(const WordSpan&, const WordSpan&) = default;
};

// Gold tags: B/I on the head piece of each word in a span, X on every
// continuation piece, O elsewhere, [CLS]/[SEP] on the specials. Spans must
// be nonempty and disjoint.
std::vector<Tag> encodeIob(const EncodedSentence& s, const std::vector<WordSpan>& spans);

struct SpanDecode {
  std::vector<WordSpan> spans;
  std::vector<std::string> warnings;  // repaired I-without-B and stray X
};

// Continuation pieces inherit their head word's tag; specials and PAD end a
// span; a span starts at B, or at an I that does not continue one.
SpanDecode decodeSpans(const EncodedSentence& s, const std::vector<Tag>& tags);

struct EntityMention {
  std::string docId;
  std::size_t sentence = 0;
  WordSpan span;
  std::string surface;
  EntityType type = EntityType::Gene;
  std::map<EntityType, double> typeDistribution;  // sums to 1
  double score = 0;  // mean probability of the predicted tags over the span
  std::optional<kg::Term> normalizedId;
};

// Mentions of one entity type from the tags and per-position distributions
// of that type's tagger.
std::vector<EntityMention> decodeEntities(const EncodedSentence& s, const std::vector<Tag>& tags,
                                          const std::vector<TagDistribution>& probabilities, EntityType type,
                                          std::string_view docId = "", std::size_t sentence = 0);

// Merges the candidates of several types. Overlapping candidates compete:
// the highest score wins, ties go to the alphabetically first type; the
// winner's distribution holds every competitor's score normalized to 1.
// Output is ordered by span.
std::vector<EntityMention> resolveTypes(std::vector<EntityMention> candidates);

}  // namespace onokg::ie
