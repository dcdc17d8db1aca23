#include "onokg/ie/linking.h"

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/ie/preprocess.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/schema.h"

namespace onokg::ie {

using kg::Term;

AliasTable AliasTable::load(const std::string& path, const kg::PrefixTable& prefixes) {
  const auto csv = text::readCsvFile(path);
  auto col = [&](std::string_view name) {
    for (std::size_t i = 0; i < csv.header.size(); ++i) {
      if (text::toLower(text::trim(csv.header[i])) == name) return i;
    }
    throw ValidationError(path, "missing column '" + std::string(name) + "'");
  };
  const auto cs = col("surface"), ct = col("type"), cc = col("canonical");
  AliasTable t;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    const auto& row = csv.rows[i];
    const std::string where = path + ":" + std::to_string(csv.lines[i]);
    const auto canon = text::trim(row[cc]);
    Term target;
    if (canon.size() > 2 && canon.front() == '<' && canon.back() == '>') {
      target = Term::iri(canon.substr(1, canon.size() - 2));
    } else {
      try {
        target = prefixes.expand(canon);
      } catch (const Error& e) {
        throw ValidationError(where, e.what());
      }
    }
    if (text::trim(row[cs]).empty()) throw ValidationError(where, "empty surface");
    t.add(row[cs], text::trim(row[ct]), std::move(target));
  }
  return t;
}

void AliasTable::add(std::string_view surface, std::string type, Term canonical) {
  entries_[{normalizeSurface(surface), text::toLower(type)}] = std::move(canonical);
}

std::optional<Term> AliasTable::lookup(std::string_view surface, std::string_view type) const {
  const auto key = normalizeSurface(surface);
  if (auto it = entries_.find({key, text::toLower(type)}); it != entries_.end()) return it->second;
  auto it = entries_.lower_bound({key, ""});
  if (it != entries_.end() && it->first.first == key) return it->second;
  return std::nullopt;
}

Term mintedIri(std::string_view surface, EntityType type) {
  std::string slug = text::slug(normalizeSurface(surface));
  if (slug.empty()) slug = text::hex64(text::fnv1a(surface));
  return Term::iri(std::string(vocab::kNorm) + text::toLower(entityTypeName(type)) + "/" + slug);
}

Linker::Linker(const kg::Graph& graph, AliasTable aliases) : aliases_(std::move(aliases)) {
  const auto& s = ontology::schema();
  const Term type = Term::iri(vocab::kRdfType);
  const Term label = Term::iri(vocab::kRdfsLabel);
  auto index = [&](const Term& cls, std::map<std::string, Term>& into, bool names) {
    for (const auto& t : graph.match(std::nullopt, type, cls)) {
      for (const auto& l : graph.match(t.subject, label, std::nullopt)) into.emplace(normalizeSurface(l.object.lexical()), t.subject);
      if (!names) continue;
      for (const auto& l : graph.match(t.subject, s.carcinomaType, std::nullopt)) into.emplace(normalizeSurface(l.object.lexical()), t.subject);
    }
  };
  index(s.biomarker, genes_, false);
  index(s.cancer, diseases_, true);
}

Term Linker::link(std::string_view surface, EntityType type) const {
  if (auto a = aliases_.lookup(surface, entityTypeName(type))) return *a;
  const auto& index = type == EntityType::Gene ? genes_ : diseases_;
  if (auto it = index.find(normalizeSurface(surface)); it != index.end()) return it->second;
  return mintedIri(surface, type);
}

bool Linker::isMinted(const Term& t) const {
  return t.isIri() && t.lexical().rfind(vocab::kNorm, 0) == 0;
}

std::string_view mentionKindName(MentionKind k) {
  switch (k) {
    case MentionKind::Gene: return "Gene";
    case MentionKind::Disease: return "Disease";
    case MentionKind::GeneType: return "GeneType";
    case MentionKind::Evidence: return "Evidence";
    case MentionKind::Class: return "Class";
  }
  return "";
}

std::string_view mentionMarker(MentionKind k) {
  switch (k) {
    case MentionKind::Gene: return "@GENE$";
    case MentionKind::Disease: return "@DISEASE$";
    case MentionKind::GeneType: return "@TYPE$";
    case MentionKind::Evidence: return "@EVIDENCE$";
    case MentionKind::Class: return "@CLASS$";
  }
  return "";
}

std::vector<LexiconHit> matchLexicon(const std::vector<std::string>& words) {
  const auto& s = ontology::schema();
  struct Entry {
    std::vector<std::string> keys;
    MentionKind kind;
    Term term;
  };
  static const std::vector<Entry> entries = [&] {
    std::vector<Entry> e;
    auto add = [&](std::string_view surface, MentionKind k, const Term& t) {
      e.push_back({text::split(normalizeSurface(surface), ' '), k, t});
    };
    add("POTSF", MentionKind::GeneType, s.potsf);
    add("Oncogene", MentionKind::GeneType, s.oncogene);
    add("ProteinCoding", MentionKind::GeneType, s.proteinCoding);
    add("protein coding", MentionKind::GeneType, s.proteinCoding);
    add("protein-coding", MentionKind::GeneType, s.proteinCoding);
    add("PubMed", MentionKind::Evidence, s.pubMed);
    add("MeSH", MentionKind::Evidence, s.meSH);
    add("CancerIndex", MentionKind::Evidence, s.cancerIndex);
    add("disease", MentionKind::Class, s.disease);
    add("biomarker", MentionKind::Class, s.biomarker);
    // Longest entries first so "protein coding" beats a shorter prefix.
    std::stable_sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) { return a.keys.size() > b.keys.size(); });
    return e;
  }();
  std::vector<std::string> keys;
  for (const auto& w : words) keys.push_back(normalizeSurface(w));
  std::vector<LexiconHit> out;
  std::size_t w = 0;
  while (w < words.size()) {
    const Entry* hit = nullptr;
    for (const auto& e : entries) {
      if (w + e.keys.size() > words.size()) continue;
      if (std::equal(e.keys.begin(), e.keys.end(), keys.begin() + static_cast<long>(w))) {
        hit = &e;
        break;
      }
    }
    if (hit) {
      out.push_back({{w, w + hit->keys.size()}, hit->kind, hit->term});
      w += hit->keys.size();
    } else {
      ++w;
    }
  }
  return out;
}

}  // namespace onokg::ie
