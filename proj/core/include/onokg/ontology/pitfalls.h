#pragma once

#include <string>
#include <vector>

#include "onokg/kg/graph.h"

namespace onokg::ontology {

struct NamingViolation {
  kg::Term element;
  std::string kind;      // "class" or "property"
  std::string expected;  // convention name
};

struct IntersectionFinding {
  kg::Term property;
  std::string role;  // "domain" or "range"
  std::vector<kg::Term> classes;
};

struct PitfallReport {
  std::vector<std::vector<kg::Term>> cycles;  // each sorted, list sorted
  std::vector<NamingViolation> naming;
  std::vector<IntersectionFinding> intersections;

  std::size_t total() const { return cycles.size() + naming.size() + intersections.size(); }
};

struct PitfallConfig {
  // Namespaces whose declared classes and properties are subject to naming
  // checks. Empty means the ono namespace.
  std::vector<std::string> homeNamespaces;
  std::string classPattern = "^[A-Z][A-Za-z0-9]*$";
  std::string propertyPattern = "^[a-z][A-Za-z0-9]*$";
};

// Strongly connected components of rdfs:subClassOf with more than one class.
// A class asserted as its own subclass is not a cycle.
std::vector<std::vector<kg::Term>> findSubclassCycles(const kg::Graph& g);

PitfallReport checkOntologyPitfalls(const kg::Graph& g, const PitfallConfig& cfg = {});

}  // namespace onokg::ontology
