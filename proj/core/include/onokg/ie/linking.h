#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "onokg/ie/iob.h"
#include "onokg/kg/graph.h"
#include "onokg/kg/prefixes.h"

namespace onokg::ie {

// Curated surface -> canonical IRI table, keyed by normalizeSurface.
class AliasTable {
 public:
  // CSV with columns surface,type,canonical; canonical is a prefixed name or
  // a full IRI in <...>.
  static AliasTable load(const std::string& path, const kg::PrefixTable& prefixes = kg::PrefixTable::standard());

  void add(std::string_view surface, std::string type, kg::Term canonical);
  // Exact (key, type) entry first, then any entry for the key.
  std::optional<kg::Term> lookup(std::string_view surface, std::string_view type) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, kg::Term> entries_;
};

// Resolution of recognized mentions to graph nodes: alias table, then the
// labels of Biomarker / Cancer individuals in the graph, then a minted
// norm:<type>/<slug> IRI. Equal normalized surfaces give equal IRIs.
class Linker {
 public:
  Linker(const kg::Graph& graph, AliasTable aliases);

  kg::Term link(std::string_view surface, EntityType type) const;
  // True when link() would mint rather than resolve.
  bool isMinted(const kg::Term& t) const;

 private:
  AliasTable aliases_;
  std::map<std::string, kg::Term> genes_;     // label key -> node
  std::map<std::string, kg::Term> diseases_;  // code / name key -> node
};

kg::Term mintedIri(std::string_view surface, EntityType type);

// Kinds of sentence participants for relation extraction.
enum class MentionKind { Gene, Disease, GeneType, Evidence, Class };
std::string_view mentionKindName(MentionKind k);
// Anonymization marker: "@GENE$", "@DISEASE$", "@TYPE$", "@EVIDENCE$", "@CLASS$".
std::string_view mentionMarker(MentionKind k);

// Schema vocabulary found by dictionary match: gene type and evidence source
// names and the class nouns "disease" and "biomarker".
struct LexiconHit {
  WordSpan span;
  MentionKind kind;
  kg::Term term;
};

std::vector<LexiconHit> matchLexicon(const std::vector<std::string>& words);

}  // namespace onokg::ie
