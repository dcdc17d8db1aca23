#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "onokg/ie/iob.h"
#include "onokg/ie/linking.h"
#include "onokg/kg/term.h"

namespace onokg::ie {

enum class RelationLabel { None, Causes, HasType, HasEvidence, IsA };
std::string_view relationName(RelationLabel r);  // "none" "causes" "hasType" "hasEvidence" "isA"
// Ontology property of a label; throws ValidationError for None.
kg::Term relationPredicate(RelationLabel r);

struct Participant {
  WordSpan span;
  MentionKind kind = MentionKind::Gene;
  std::string surface;
  kg::Term id;
};

// What a classifier sees of one participant pair (in sentence order).
struct RelationInput {
  std::string anonymized;  // sentence with only the two participants masked
  MentionKind first = MentionKind::Gene, second = MentionKind::Gene;
  std::string between;  // lowercased words strictly between the pair
  std::string after;    // lowercased words after the second participant
  std::vector<MentionKind> kindsBetween;
};

struct RelationVerdict {
  RelationLabel label = RelationLabel::None;
  double confidence = 0.0;  // in [0, 1]; 0 for None
  bool firstIsSubject = true;
};

class RelationClassifier {
 public:
  virtual ~RelationClassifier() = default;
  virtual RelationVerdict classify(const RelationInput& in) const = 0;
  virtual std::string name() const = 0;
};

// Lexical cue rules over the text between and after the pair.
class RuleRelationClassifier final : public RelationClassifier {
 public:
  RelationVerdict classify(const RelationInput& in) const override;
  std::string name() const override { return "rules"; }
};

struct RelationCandidate {
  std::size_t sentence = 0;
  std::string anonymized;
  Participant subject, object;
  RelationLabel label = RelationLabel::None;
  double confidence = 0.0;
};

// One candidate per unordered participant pair, None-labelled ones included.
// Fewer than two participants give no candidates.
std::vector<RelationCandidate> extractRelations(const std::vector<std::string>& words, std::vector<Participant> participants,
                                                const RelationClassifier& classifier, std::size_t sentence = 0);

// The masked sentence for a pair: words joined by spaces, each participant
// span replaced by its marker.
std::string anonymize(const std::vector<std::string>& words, const Participant& a, const Participant& b);

}  // namespace onokg::ie
