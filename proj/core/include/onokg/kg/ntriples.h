#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "onokg/kg/graph.h"

namespace onokg::kg {

enum class NTriplesErrorKind {
  UnterminatedLiteral,
  RelativeIri,
  MissingTerminator,
  UnterminatedIri,
  InvalidEscape,
  InvalidBlankLabel,
  UnexpectedToken,
  InvalidTriple,
};

std::string_view toString(NTriplesErrorKind kind);

struct NTriplesError {
  std::size_t line = 0;
  NTriplesErrorKind kind = NTriplesErrorKind::UnexpectedToken;
  std::string message;
};

struct NTriplesLoadResult {
  std::size_t triplesRead = 0;    // well-formed lines
  std::size_t triplesAdded = 0;   // of those, new to the graph
  std::vector<NTriplesError> errors;
  bool ok() const { return errors.empty(); }
};

// Parses the line-oriented N-Triples subset into `graph`. Malformed lines are
// reported and skipped; the parser continues with the next line. Blank node
// labels are scoped to this document: each label maps to a blank node that
// is fresh in `graph` (the original label is kept when it is unused).
NTriplesLoadResult parseNTriples(std::string_view text, Graph& graph);

// Convenience form that loads into a new graph.
Graph parseNTriples(std::string_view text, std::vector<NTriplesError>* errors = nullptr);

// One line per triple, sorted by (s, p, o) ids. The empty graph serializes to
// the empty string.
std::string serializeNTriples(const Graph& graph);

void loadNTriplesFile(const std::string& path, Graph& graph, NTriplesLoadResult* result = nullptr);
void saveNTriplesFile(const std::string& path, const Graph& graph);

}  // namespace onokg::kg
