#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "onokg/kg/term.h"

namespace onokg::kg {

// prefix -> namespace IRI. Prefixes are unique keys; re-registering a prefix
// replaces its namespace.
class PrefixTable {
 public:
  PrefixTable() = default;

  // rdf, rdfs, owl, xsd, ono, doid, obo, norm.
  static PrefixTable standard();

  void add(std::string prefix, std::string ns);
  bool contains(std::string_view prefix) const;
  std::optional<std::string> namespaceOf(std::string_view prefix) const;

  // "prefix:local" -> IRI term. Throws UnknownNameError("prefix", ...) for an
  // unregistered prefix and SyntaxError when there is no ':'.
  Term expand(std::string_view qname) const;

  // Longest-namespace compaction of an IRI, or the IRI itself in <...>.
  std::string compact(std::string_view iri) const;

  const std::map<std::string, std::string, std::less<>>& entries() const { return map_; }

 private:
  std::map<std::string, std::string, std::less<>> map_;
};

}  // namespace onokg::kg
