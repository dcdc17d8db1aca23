#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "onokg/kg/graph.h"

namespace onokg::dl {

struct QaAnswer {
  std::string expression;  // DL query the question was mapped to
  std::vector<kg::Term> answers;
};

// Maps an English question onto a DL query by keyword templates and
// evaluates it. Recognized cues: "caused by <gene>" (cancer retrieval over
// the inverse of causes), gene types, cohort codes or the first word of a
// cohort name ("breast"), evidence sources, and significance words
// ("highly", "high", "medium", "low"). Throws ValidationError when nothing
// in the question maps to a query.
QaAnswer answerQuestion(const kg::Graph& g, std::string_view question);

// Same mapping without evaluation.
std::string questionToDlx(const kg::Graph& g, std::string_view question);

}  // namespace onokg::dl
