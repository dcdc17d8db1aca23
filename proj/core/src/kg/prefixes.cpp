#include "onokg/kg/prefixes.h"

#include "onokg/common/error.h"
#include "onokg/kg/vocab.h"

namespace onokg::kg {

PrefixTable PrefixTable::standard() {
  PrefixTable t;
  t.add("rdf", std::string(vocab::kRdf));
  t.add("rdfs", std::string(vocab::kRdfs));
  t.add("owl", std::string(vocab::kOwl));
  t.add("xsd", std::string(vocab::kXsd));
  t.add("ono", std::string(vocab::kOno));
  t.add("doid", std::string(vocab::kDoid));
  t.add("obo", std::string(vocab::kObo));
  t.add("norm", std::string(vocab::kNorm));
  return t;
}

void PrefixTable::add(std::string prefix, std::string ns) {
  map_.insert_or_assign(std::move(prefix), std::move(ns));
}

bool PrefixTable::contains(std::string_view prefix) const {
  return map_.find(prefix) != map_.end();
}

std::optional<std::string> PrefixTable::namespaceOf(std::string_view prefix) const {
  auto it = map_.find(prefix);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Term PrefixTable::expand(std::string_view qname) const {
  auto colon = qname.find(':');
  if (colon == std::string_view::npos) {
    throw SyntaxError(0, 0, "not a prefixed name: '" + std::string(qname) + "'");
  }
  auto prefix = qname.substr(0, colon);
  auto it = map_.find(prefix);
  if (it == map_.end()) throw UnknownNameError("prefix", std::string(prefix));
  return Term::iri(it->second + std::string(qname.substr(colon + 1)));
}

std::string PrefixTable::compact(std::string_view iri) const {
  const std::string* bestPrefix = nullptr;
  std::size_t bestLen = 0;
  for (const auto& [prefix, ns] : map_) {
    if (ns.size() > bestLen && iri.substr(0, ns.size()) == ns) {
      bestPrefix = &prefix;
      bestLen = ns.size();
    }
  }
  if (!bestPrefix) return "<" + std::string(iri) + ">";
  return *bestPrefix + ":" + std::string(iri.substr(bestLen));
}

}  // namespace onokg::kg
