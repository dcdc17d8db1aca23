#include "onokg/ie/relations.h"

#include <algorithm>
#include <regex>

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/ontology/schema.h"

namespace onokg::ie {

std::string_view relationName(RelationLabel r) {
  switch (r) {
    case RelationLabel::None: return "none";
    case RelationLabel::Causes: return "causes";
    case RelationLabel::HasType: return "hasType";
    case RelationLabel::HasEvidence: return "hasEvidence";
    case RelationLabel::IsA: return "isA";
  }
  return "none";
}

kg::Term relationPredicate(RelationLabel r) {
  const auto& s = ontology::schema();
  switch (r) {
    case RelationLabel::Causes: return s.causes;
    case RelationLabel::HasType: return s.hasType;
    case RelationLabel::HasEvidence: return s.hasEvidence;
    case RelationLabel::IsA: return s.isA;
    case RelationLabel::None: break;
  }
  throw ValidationError("relation", "the none label has no predicate");
}

namespace {

bool has(const std::string& text, const std::regex& re) { return std::regex_search(text, re); }

bool anyOf(const std::vector<MentionKind>& ks, std::initializer_list<MentionKind> which) {
  return std::any_of(ks.begin(), ks.end(), [&](MentionKind k) { return std::find(which.begin(), which.end(), k) != which.end(); });
}

}  // namespace

RelationVerdict RuleRelationClassifier::classify(const RelationInput& in) const {
  static const std::regex causeCue(R"(\b(responsible for|causes|cause|caused by)\b)");
  static const std::regex classCue(R"(^(called|named|such as|like|,? ?including)$)");
  static const std::regex typeCue(R"(^(has|have|with|shows|exhibits)$)");
  static const std::regex functionAfter(R"(^(functionality|function|activity)\b)");
  static const std::regex isaCue(R"(^(gene )?(is|is a|is an|is a known|acts as a|acts as an|functions as a|functions as an)$)");
  static const std::regex evidenceCue(R"(\b(mentioned|cited|reported|described|documented) in\b)");
  using K = MentionKind;
  const bool entityBetween = anyOf(in.kindsBetween, {K::Gene, K::Disease});

  if (in.first == K::Gene && in.second == K::Disease && !entityBetween && has(in.between, causeCue)) {
    return {RelationLabel::Causes, 0.9, true};
  }
  if (in.first == K::Class && in.second == K::Disease && in.kindsBetween.empty() && has(in.between, classCue)) {
    return {RelationLabel::IsA, 0.85, false};
  }
  if (in.first == K::Gene && in.second == K::GeneType && in.kindsBetween.empty()) {
    if (has(in.between, typeCue) && has(in.after, functionAfter)) return {RelationLabel::HasType, 0.85, true};
    if (has(in.between, isaCue)) return {RelationLabel::IsA, 0.85, true};
  }
  if (in.second == K::Evidence && in.first != K::Evidence && in.kindsBetween.empty() && has(in.between, evidenceCue)) {
    return {RelationLabel::HasEvidence, 0.8, true};
  }
  return {};
}

std::string anonymize(const std::vector<std::string>& words, const Participant& a, const Participant& b) {
  std::string out;
  for (std::size_t w = 0; w < words.size();) {
    if (!out.empty()) out += ' ';
    const Participant* p = w == a.span.begin ? &a : w == b.span.begin ? &b : nullptr;
    if (p) {
      out += mentionMarker(p->kind);
      w = p->span.end;
    } else {
      out += words[w++];
    }
  }
  return out;
}

std::vector<RelationCandidate> extractRelations(const std::vector<std::string>& words, std::vector<Participant> participants,
                                                const RelationClassifier& classifier, std::size_t sentence) {
  std::sort(participants.begin(), participants.end(), [](const Participant& a, const Participant& b) { return a.span < b.span; });
  for (std::size_t i = 1; i < participants.size(); ++i) {
    if (participants[i].span.begin < participants[i - 1].span.end) throw ValidationError("participants", "overlapping spans");
  }
  auto lowerRange = [&](std::size_t b, std::size_t e) {
    std::string out;
    for (std::size_t w = b; w < e && w < words.size(); ++w) {
      if (!out.empty()) out += ' ';
      out += text::toLower(words[w]);
    }
    return out;
  };
  std::vector<RelationCandidate> out;
  for (std::size_t i = 0; i < participants.size(); ++i) {
    for (std::size_t j = i + 1; j < participants.size(); ++j) {
      const auto& a = participants[i];
      const auto& b = participants[j];
      RelationInput in;
      in.anonymized = anonymize(words, a, b);
      in.first = a.kind;
      in.second = b.kind;
      in.between = lowerRange(a.span.end, b.span.begin);
      in.after = lowerRange(b.span.end, words.size());
      for (std::size_t k = i + 1; k < j; ++k) in.kindsBetween.push_back(participants[k].kind);
      const auto v = classifier.classify(in);
      RelationCandidate c;
      c.sentence = sentence;
      c.anonymized = std::move(in.anonymized);
      c.subject = v.firstIsSubject ? a : b;
      c.object = v.firstIsSubject ? b : a;
      c.label = v.label;
      c.confidence = v.label == RelationLabel::None ? 0.0 : std::clamp(v.confidence, 0.0, 1.0);
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace onokg::ie
