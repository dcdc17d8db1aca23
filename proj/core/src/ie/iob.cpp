#include "onokg/ie/iob.h"

#include <algorithm>

#include "onokg/common/error.h"

namespace onokg::ie {

std::string_view tagName(Tag t) {
  switch (t) {
    case Tag::B: return "B";
    case Tag::I: return "I";
    case Tag::O: return "O";
    case Tag::X: return "X";
    case Tag::Cls: return "[CLS]";
    case Tag::Sep: return "[SEP]";
    case Tag::Pad: return "PAD";
  }
  return "O";
}

std::optional<Tag> parseTag(std::string_view s) {
  for (int k = 0; k < kNumTags; ++k) {
    if (tagName(static_cast<Tag>(k)) == s) return static_cast<Tag>(k);
  }
  return std::nullopt;
}

std::string_view entityTypeName(EntityType t) { return t == EntityType::Gene ? "Gene" : "Disease"; }

std::optional<EntityType> parseEntityType(std::string_view s) {
  if (s == "Gene" || s == "gene") return EntityType::Gene;
  if (s == "Disease" || s == "disease") return EntityType::Disease;
  return std::nullopt;
}

EncodedSentence encodeWords(const std::vector<std::string>& words, const SubwordVocab& vocab,
                            std::size_t maxPiecesPerWord) {
  EncodedSentence s;
  s.words = words;
  s.pieces.push_back("[CLS]");
  s.wordOf.push_back(-1);
  s.continuation.push_back(false);
  for (std::size_t w = 0; w < words.size(); ++w) {
    auto pieces = wordpieceTokenize(words[w], vocab);
    if (pieces.size() > maxPiecesPerWord) pieces = {std::string(SubwordVocab::kUnknown)};
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      s.pieces.push_back(std::move(pieces[k]));
      s.wordOf.push_back(static_cast<int>(w));
      s.continuation.push_back(k > 0);
    }
  }
  s.pieces.push_back("[SEP]");
  s.wordOf.push_back(-1);
  s.continuation.push_back(false);
  return s;
}

std::vector<Tag> encodeIob(const EncodedSentence& s, const std::vector<WordSpan>& spans) {
  std::vector<Tag> wordTags(s.words.size(), Tag::O);
  for (const auto& sp : spans) {
    if (sp.begin >= sp.end || sp.end > s.words.size()) throw ValidationError("span", "empty or out of range");
    for (std::size_t w = sp.begin; w < sp.end; ++w) {
      if (wordTags[w] != Tag::O) throw ValidationError("span", "overlapping spans");
      wordTags[w] = w == sp.begin ? Tag::B : Tag::I;
    }
  }
  std::vector<Tag> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.wordOf[i] < 0) {
      out.push_back(i == 0 ? Tag::Cls : Tag::Sep);
    } else if (s.continuation[i]) {
      out.push_back(Tag::X);
    } else {
      out.push_back(wordTags[static_cast<std::size_t>(s.wordOf[i])]);
    }
  }
  return out;
}

SpanDecode decodeSpans(const EncodedSentence& s, const std::vector<Tag>& tags) {
  if (tags.size() != s.size()) throw ValidationError("tags", "length differs from the encoded sentence");
  SpanDecode out;
  bool open = false;
  std::size_t openBegin = 0, openEnd = 0;
  auto close = [&] {
    if (open) out.spans.push_back({openBegin, openEnd});
    open = false;
  };
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const int w = s.wordOf[i];
    const Tag t = tags[i];
    if (w >= 0 && s.continuation[i]) continue;  // the head piece's tag governs the word
    if (w < 0 || t == Tag::Cls || t == Tag::Sep || t == Tag::Pad) {
      close();
      continue;
    }
    const auto word = static_cast<std::size_t>(w);
    switch (t) {
      case Tag::B:
        close();
        open = true;
        openBegin = word;
        openEnd = word + 1;
        break;
      case Tag::I:
        if (!open) {
          out.warnings.push_back("I without B at word " + std::to_string(word) + " treated as B");
          open = true;
          openBegin = word;
        }
        openEnd = word + 1;
        break;
      case Tag::X:
        out.warnings.push_back("X at position " + std::to_string(i) + " has no head piece; treated as O");
        close();
        break;
      default:
        close();
        break;
    }
  }
  close();
  return out;
}

namespace {

std::string joinWords(const EncodedSentence& s, const WordSpan& sp) {
  std::string out;
  for (std::size_t w = sp.begin; w < sp.end; ++w) {
    if (w > sp.begin) out += ' ';
    out += s.words[w];
  }
  return out;
}

}  // namespace

std::vector<EntityMention> decodeEntities(const EncodedSentence& s, const std::vector<Tag>& tags,
                                          const std::vector<TagDistribution>& probabilities, EntityType type,
                                          std::string_view docId, std::size_t sentence) {
  if (probabilities.size() != tags.size()) throw ValidationError("probabilities", "length differs from the tags");
  auto decoded = decodeSpans(s, tags);
  std::vector<EntityMention> out;
  for (const auto& sp : decoded.spans) {
    EntityMention m;
    m.docId = std::string(docId);
    m.sentence = sentence;
    m.span = sp;
    m.surface = joinWords(s, sp);
    m.type = type;
    m.typeDistribution = {{type, 1.0}};
    double sum = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const int w = s.wordOf[i];
      if (w < 0 || s.continuation[i] || static_cast<std::size_t>(w) < sp.begin || static_cast<std::size_t>(w) >= sp.end) continue;
      sum += probabilities[i][static_cast<std::size_t>(tags[i])];
      ++n;
    }
    m.score = n ? sum / static_cast<double>(n) : 0.0;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<EntityMention> resolveTypes(std::vector<EntityMention> candidates) {
  std::sort(candidates.begin(), candidates.end(), [](const EntityMention& a, const EntityMention& b) {
    return std::tie(a.sentence, a.span, a.type) < std::tie(b.sentence, b.span, b.type);
  });
  std::vector<EntityMention> out;
  std::size_t i = 0;
  while (i < candidates.size()) {
    // Cluster of transitively overlapping candidates in one sentence.
    std::size_t j = i + 1;
    std::size_t clusterEnd = candidates[i].span.end;
    while (j < candidates.size() && candidates[j].sentence == candidates[i].sentence && candidates[j].span.begin < clusterEnd) {
      clusterEnd = std::max(clusterEnd, candidates[j].span.end);
      ++j;
    }
    std::size_t best = i;
    std::map<EntityType, double> scores;
    for (std::size_t k = i; k < j; ++k) {
      const auto& c = candidates[k];
      scores[c.type] = std::max(scores[c.type], c.score);
      const auto& b = candidates[best];
      if (c.score > b.score || (c.score == b.score && c.type < b.type)) best = k;
    }
    EntityMention winner = candidates[best];
    double total = 0;
    for (const auto& [t, v] : scores) total += v;
    winner.typeDistribution.clear();
    for (const auto& [t, v] : scores) winner.typeDistribution[t] = total > 0 ? v / total : 1.0 / static_cast<double>(scores.size());
    out.push_back(std::move(winner));
    i = j;
  }
  return out;
}

}  // namespace onokg::ie
