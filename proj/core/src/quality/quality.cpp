#include "onokg/quality/quality.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#ifdef ONOKG_LIVE_RESOLVER
#include <httplib.h>
#endif

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/kg/prefixes.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/schema.h"

namespace onokg::quality {

using kg::Term;
using nlohmann::json;

namespace {

constexpr std::string_view kSkosPrefLabel = "http://www.w3.org/2004/02/skos/core#prefLabel";

bool startsWith(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

bool inAny(std::string_view iri, const std::vector<std::string>& namespaces) {
  return std::any_of(namespaces.begin(), namespaces.end(), [&](const std::string& ns) { return startsWith(iri, ns); });
}

bool isVocabulary(std::string_view iri) {
  for (auto ns : {vocab::kRdf, vocab::kRdfs, vocab::kOwl, vocab::kXsd}) {
    if (startsWith(iri, ns)) return true;
  }
  return false;
}

bool isForeign(const Term& t, const QualityConfig& cfg) {
  return t.isIri() && !inAny(t.lexical(), cfg.homeNamespaces) && !isVocabulary(t.lexical());
}

bool isHome(const Term& t, const QualityConfig& cfg) { return t.isIri() && inAny(t.lexical(), cfg.homeNamespaces); }

std::string expandName(const std::string& name, const kg::PrefixTable& prefixes) {
  if (kg::isAbsoluteIri(name) && name.find("://") != std::string::npos) return name;
  if (name.size() > 2 && name.front() == '<' && name.back() == '>') return name.substr(1, name.size() - 2);
  return prefixes.expand(name).lexical();
}

std::vector<std::string> expandAll(const json& arr, const kg::PrefixTable& prefixes, const char* key) {
  if (!arr.is_array()) throw ValidationError(key, std::string(key) + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(expandName(v.get<std::string>(), prefixes));
  return out;
}

bool leapYear(long y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

bool validDate(std::string_view s) {
  static const std::regex re(R"(^(-?)(\d{4,})-(\d{2})-(\d{2})(Z|[+-]\d{2}:\d{2})?$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(s.begin(), s.end(), m, re)) return false;
  const std::string yearText = m[2].str();
  if (yearText.size() > 4 && yearText.front() == '0') return false;
  if (yearText == "0000") return false;
  const long year = std::stol(yearText) * (m[1].length() ? -1 : 1);
  const int month = std::stoi(m[3].str());
  const int day = std::stoi(m[4].str());
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month < 1 || month > 12 || day < 1) return false;
  const int limit = kDays[month - 1] + (month == 2 && leapYear(std::labs(year)) ? 1 : 0);
  if (day > limit) return false;
  if (m[5].matched && m[5].length() > 1) {
    const auto tz = m[5].str();
    const int hh = std::stoi(tz.substr(1, 2)), mm = std::stoi(tz.substr(4, 2));
    if (mm > 59 || hh > 14 || (hh == 14 && mm != 0)) return false;
  }
  return true;
}

// Accumulates one metric while iterating; caps the sample.
struct Builder {
  MetricResult r;

  Builder(std::string name, std::string dimension, MetricKind kind) {
    r.name = std::move(name);
    r.dimension = std::move(dimension);
    r.kind = kind;
  }
  void offend(std::string item) {
    if (r.sample.size() < MetricResult::kMaxSample) r.sample.push_back(std::move(item));
  }
  MetricResult ratio(std::size_t num, std::size_t den) {
    r.numerator = num;
    r.denominator = den;
    r.vacuous = den == 0;
    r.ratio = den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
    return std::move(r);
  }
  MetricResult count(std::size_t n, std::size_t population) {
    r.numerator = n;
    r.denominator = population;
    return std::move(r);
  }
  MetricResult skipped(std::string why) {
    r.status = MetricStatus::Skipped;
    r.note = std::move(why);
    return std::move(r);
  }
};

// Distinct subjects with their (predicate, object) description sets.
using Description = std::set<std::pair<std::uint64_t, std::uint64_t>>;

struct Snapshot {
  std::vector<kg::Triple> triples;
  std::vector<kg::IdTriple> ids;
  std::map<std::uint64_t, Description> subjects;  // ordered by subject id
};

Snapshot snapshot(const kg::Graph& g) {
  Snapshot s;
  s.ids = g.allIds();
  s.triples.reserve(s.ids.size());
  for (const auto& t : s.ids) {
    s.triples.push_back(g.decode(t));
    s.subjects[t.s.value].insert({t.p.value, t.o.value});
  }
  return s;
}

std::size_t occurrences(const kg::Graph& g, const Term& t) {
  const auto id = g.lookup(t);
  if (!id) return 0;
  return g.count(*id, std::nullopt, std::nullopt) + g.count(std::nullopt, *id, std::nullopt) +
         g.count(std::nullopt, std::nullopt, *id);
}

MetricResult schemaCompleteness(const kg::Graph& g, const QualityConfig& cfg) {
  Builder b("schema_completeness", "completeness", MetricKind::Ratio);
  std::set<std::string> gold(cfg.goldClasses.begin(), cfg.goldClasses.end());
  gold.insert(cfg.goldProperties.begin(), cfg.goldProperties.end());
  if (gold.empty()) return b.skipped("no gold standard configured");
  std::size_t present = 0;
  for (const auto& iri : gold) {
    if (occurrences(g, Term::iri(iri)) > 0) {
      ++present;
    } else {
      b.offend(iri);
    }
  }
  return b.ratio(present, gold.size());
}

MetricResult interlinking(const kg::Graph& g, const QualityConfig& cfg) {
  Builder b("interlinking_completeness", "interlinking", MetricKind::Ratio);
  if (!cfg.linkableClass) return b.skipped("no linkable class configured");
  if (cfg.homeNamespaces.empty()) return b.skipped("no home namespaces configured");
  std::set<Term> linkable;
  for (const auto& t : g.match(std::nullopt, Term::iri(vocab::kRdfType), Term::iri(*cfg.linkableClass))) {
    linkable.insert(t.subject);
  }
  std::size_t linked = 0;
  for (const auto& r : g.match(std::nullopt, Term::iri(vocab::kRdfType), Term::iri(*cfg.linkableClass))) {
    const auto outgoing = g.match(r.subject, std::nullopt, std::nullopt);
    const bool any = std::any_of(outgoing.begin(), outgoing.end(), [&](const kg::Triple& t) {
      return t.predicate.lexical() != vocab::kRdfType && isForeign(t.object, cfg);
    });
    if (any) {
      ++linked;
    } else {
      b.offend(r.subject.lexical());
    }
  }
  return b.ratio(linked, linkable.size());
}

MetricResult propertyCompleteness(const kg::Graph& g, const QualityConfig& cfg) {
  Builder b("property_completeness", "completeness", MetricKind::Ratio);
  if (!cfg.completenessClass || !cfg.completenessPredicate) return b.skipped("no class and predicate configured");
  const Term p = Term::iri(*cfg.completenessPredicate);
  std::size_t carrying = 0, total = 0;
  for (const auto& t : g.match(std::nullopt, Term::iri(vocab::kRdfType), Term::iri(*cfg.completenessClass))) {
    ++total;
    if (!g.match(t.subject, p, std::nullopt).empty()) {
      ++carrying;
    } else {
      b.offend(t.subject.display());
    }
  }
  return b.ratio(carrying, total);
}

MetricResult numericRange(const kg::Graph& g, const QualityConfig& cfg) {
  Builder b("numeric_range_violations", "completeness", MetricKind::Ratio);
  if (cfg.ranges.empty()) return b.skipped("no numeric ranges configured");
  std::size_t outside = 0, checked = 0;
  for (const auto& range : cfg.ranges) {
    for (const auto& t : g.match(std::nullopt, Term::iri(range.predicate), std::nullopt)) {
      const auto v = t.object.numericValue();
      if (!v) continue;
      ++checked;
      if (*v < range.lower || *v > range.upper) {
        ++outside;
        b.offend(t.subject.display() + " " + t.predicate.display() + " " + t.object.lexical());
      }
    }
  }
  b.r.note = "ratio is the violating fraction of numeric values checked";
  return b.ratio(outside, checked);
}

MetricResult conciseness(const kg::Graph& g, const Snapshot& s) {
  Builder b("extensional_conciseness", "conciseness", MetricKind::Ratio);
  std::map<Description, std::uint64_t> firstWith;
  for (const auto& [subject, description] : s.subjects) {
    auto [it, fresh] = firstWith.emplace(description, subject);
    if (!fresh) b.offend(g.decode(kg::TermId{subject}).display() + " duplicates " + g.decode(kg::TermId{it->second}).display());
  }
  return b.ratio(firstWith.size(), s.subjects.size());
}

MetricResult externalSameAs(const Snapshot& s, const QualityConfig& cfg) {
  Builder b("external_sameas_links", "interlinking", MetricKind::Count);
  if (cfg.homeNamespaces.empty()) return b.skipped("no home namespaces configured");
  std::size_t external = 0, total = 0;
  for (const auto& t : s.triples) {
    if (t.predicate.lexical() != vocab::kOwlSameAs) continue;
    ++total;
    if (isForeign(t.object, cfg)) ++external;
  }
  return b.count(external, total);
}

MetricResult datatypes(const Snapshot& s) {
  Builder b("datatype_compatibility", "conciseness", MetricKind::Ratio);
  std::size_t valid = 0, checked = 0;
  for (const auto& t : s.triples) {
    if (!t.object.isLiteral() || !t.object.datatype()) continue;
    const auto ok = lexicalFormValid(t.object.lexical(), *t.object.datatype());
    if (!ok) continue;
    ++checked;
    if (*ok) {
      ++valid;
    } else {
      b.offend(t.object.toNTriples());
    }
  }
  return b.ratio(valid, checked);
}

// Distinct IRIs over the given positions.
template <typename Pick>
std::vector<Term> distinctIris(const Snapshot& s, Pick pick) {
  std::set<Term> seen;
  std::vector<Term> out;
  for (const auto& t : s.triples) {
    for (const Term* term : pick(t)) {
      if (term->isIri() && seen.insert(*term).second) out.push_back(*term);
    }
  }
  return out;
}

MetricResult dereferenceable(const Snapshot& s, const QualityConfig& cfg) {
  Builder b("dereferenceable_uris", "availability", MetricKind::Ratio);
  const auto iris = distinctIris(s, [](const kg::Triple& t) {
    return std::vector<const Term*>{&t.subject, &t.predicate, &t.object};
  });
  std::size_t accepted = 0;
  for (const auto& iri : iris) {
    if (resolveUri(cfg, iri.lexical())) {
      ++accepted;
    } else {
      b.offend(iri.lexical());
    }
  }
  b.r.note = std::string("resolver ") + std::string(resolverModeName(cfg.resolver));
  return b.ratio(accepted, iris.size());
}

MetricResult ownLinks(const Snapshot& s, const QualityConfig& cfg, bool objects) {
  Builder b(objects ? "dereferenceable_back_links" : "dereferenceable_forward_links", "availability",
            MetricKind::Ratio);
  if (cfg.homeNamespaces.empty()) return b.skipped("no home namespaces configured");
  std::set<Term> seen;
  std::size_t own = 0;
  for (const auto& t : s.triples) {
    const Term& term = objects ? t.object : t.subject;
    if (!seen.insert(term).second) continue;
    if (isHome(term, cfg)) {
      ++own;
    } else {
      b.offend(term.display());
    }
  }
  return b.ratio(own, seen.size());
}

MetricResult coverageDetail(const Snapshot& s) {
  Builder b("coverage_detail", "relevancy", MetricKind::Count);
  std::set<std::uint64_t> predicates;
  for (const auto& t : s.ids) predicates.insert(t.p.value);
  return b.count(predicates.size(), s.ids.size());
}

MetricResult coverageScope(const Snapshot& s) {
  Builder b("coverage_scope", "relevancy", MetricKind::Count);
  return b.count(s.subjects.size(), s.ids.size());
}

MetricResult labeled(const kg::Graph& g, const Snapshot& s, const QualityConfig& cfg) {
  Builder b("labeled_resources", "relevancy", MetricKind::Ratio);
  std::set<std::uint64_t> labelIds;
  for (const auto& p : cfg.labelPredicates) {
    if (auto id = g.lookup(Term::iri(p))) labelIds.insert(id->value);
  }
  std::size_t count = 0;
  for (const auto& [subject, description] : s.subjects) {
    const bool has = std::any_of(description.begin(), description.end(),
                                 [&](const auto& po) { return labelIds.count(po.first) > 0; });
    if (has) {
      ++count;
    } else {
      b.offend(g.decode(kg::TermId{subject}).display());
    }
  }
  return b.ratio(count, s.subjects.size());
}

}  // namespace

std::string_view resolverModeName(ResolverMode m) {
  switch (m) {
    case ResolverMode::OfflineAllowlist: return "offline-allowlist";
    case ResolverMode::Syntactic: return "syntactic";
    case ResolverMode::Live: return "live";
  }
  return "";
}

ResolverMode parseResolverMode(std::string_view s) {
  for (auto m : {ResolverMode::OfflineAllowlist, ResolverMode::Syntactic, ResolverMode::Live}) {
    if (resolverModeName(m) == s) return m;
  }
  throw ValidationError("resolver.mode", "unknown resolver mode '" + std::string(s) + "'");
}

std::optional<bool> lexicalFormValid(std::string_view lexical, std::string_view datatype) {
  static const std::regex integer(R"(^[+-]?\d+$)");
  static const std::regex decimal(R"(^[+-]?(\d+(\.\d*)?|\.\d+)$)");
  const std::string s(lexical);
  if (datatype == vocab::kXsdInteger) return std::regex_match(s, integer);
  if (datatype == vocab::kXsdDecimal) return std::regex_match(s, decimal);
  if (datatype == vocab::kXsdBoolean) return s == "true" || s == "false" || s == "1" || s == "0";
  if (datatype == vocab::kXsdDate) return validDate(s);
  return std::nullopt;
}

QualityConfig QualityConfig::ontologyDefaults() {
  const auto& o = ontology::schema();
  QualityConfig c;
  c.homeNamespaces = {std::string(vocab::kOno), std::string(vocab::kNorm)};
  for (const auto& t : o.classes()) c.goldClasses.push_back(t.lexical());
  for (const auto& t : o.objectProperties()) c.goldProperties.push_back(t.lexical());
  for (const auto& t : o.datatypeProperties()) c.goldProperties.push_back(t.lexical());
  c.linkableClass = o.biomarker.lexical();
  c.completenessClass = o.biomarker.lexical();
  c.completenessPredicate = o.hasEvidence.lexical();
  c.allowlist = {std::string(vocab::kOno), std::string(vocab::kNorm), std::string(vocab::kRdf),
                 std::string(vocab::kRdfs), std::string(vocab::kOwl), std::string(vocab::kXsd)};
  c.labelPredicates = {std::string(vocab::kRdfsLabel), std::string(kSkosPrefLabel)};
  return c;
}

void QualityConfig::validate() const {
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const auto& r = ranges[i];
    if (!std::isfinite(r.lower) || !std::isfinite(r.upper)) {
      throw ValidationError("numeric_ranges[" + std::to_string(i) + "]", "numeric range for " + r.predicate + " has a non-finite bound");
    }
    if (r.lower > r.upper) throw ValidationError("numeric_ranges[" + std::to_string(i) + "]", "numeric range for " + r.predicate + " has lower > upper");
  }
  if (completenessClass.has_value() != completenessPredicate.has_value()) {
    throw ValidationError("property_completeness", "property completeness needs both a class and a predicate");
  }
  if (liveTimeoutMs <= 0) throw ValidationError("resolver.timeout_ms", "resolver timeout must be positive");
#ifndef ONOKG_LIVE_RESOLVER
  if (resolver == ResolverMode::Live) {
    throw ValidationError("resolver.mode", "live resolver not available in this build (configure with ONOKG_LIVE_RESOLVER=ON)");
  }
#endif
}

QualityConfig QualityConfig::fromJson(const json& j) {
  if (!j.is_object()) throw ValidationError("quality config", "quality config must be a JSON object");
  auto prefixes = kg::PrefixTable::standard();
  prefixes.add("skos", "http://www.w3.org/2004/02/skos/core#");
  if (j.contains("prefixes")) {
    for (const auto& [k, v] : j.at("prefixes").items()) prefixes.add(k, v.get<std::string>());
  }
  QualityConfig c;
  c.labelPredicates = {std::string(vocab::kRdfsLabel), std::string(kSkosPrefLabel)};
  try {
    if (j.contains("home_namespaces")) {
      for (const auto& v : j.at("home_namespaces")) {
        const auto s = v.get<std::string>();
        auto ns = prefixes.namespaceOf(s);
        c.homeNamespaces.push_back(ns ? *ns : s);
      }
    }
    if (j.contains("gold_standard")) {
      const auto& gs = j.at("gold_standard");
      if (gs.is_string()) {
        if (gs.get<std::string>() != "ono-schema") throw ValidationError("gold_standard", "unknown gold standard '" + gs.get<std::string>() + "'");
        const auto d = ontologyDefaults();
        c.goldClasses = d.goldClasses;
        c.goldProperties = d.goldProperties;
      } else {
        if (gs.contains("classes")) c.goldClasses = expandAll(gs.at("classes"), prefixes, "gold_standard.classes");
        if (gs.contains("properties")) c.goldProperties = expandAll(gs.at("properties"), prefixes, "gold_standard.properties");
      }
    }
    if (j.contains("interlinking")) c.linkableClass = expandName(j.at("interlinking").at("class").get<std::string>(), prefixes);
    if (j.contains("property_completeness")) {
      const auto& pc = j.at("property_completeness");
      if (pc.contains("class")) c.completenessClass = expandName(pc.at("class").get<std::string>(), prefixes);
      if (pc.contains("predicate")) c.completenessPredicate = expandName(pc.at("predicate").get<std::string>(), prefixes);
    }
    if (j.contains("numeric_ranges")) {
      for (const auto& r : j.at("numeric_ranges")) {
        c.ranges.push_back({expandName(r.at("predicate").get<std::string>(), prefixes), r.at("lower").get<double>(),
                            r.at("upper").get<double>()});
      }
    }
    if (j.contains("resolver")) {
      const auto& r = j.at("resolver");
      if (r.contains("mode")) c.resolver = parseResolverMode(r.at("mode").get<std::string>());
      if (r.contains("allowlist")) {
        for (const auto& v : r.at("allowlist")) {
          const auto s = v.get<std::string>();
          auto ns = prefixes.namespaceOf(s);
          c.allowlist.push_back(ns ? *ns : s);
        }
      }
      if (r.contains("timeout_ms")) c.liveTimeoutMs = r.at("timeout_ms").get<int>();
    }
    if (j.contains("label_predicates")) c.labelPredicates = expandAll(j.at("label_predicates"), prefixes, "label_predicates");
  } catch (const json::exception& e) {
    throw ValidationError("quality config", std::string("malformed quality config: ") + e.what());
  }
  c.validate();
  return c;
}

QualityConfig QualityConfig::load(const std::string& path) {
  json j;
  try {
    j = json::parse(text::readFile(path));
  } catch (const json::parse_error& e) {
    throw SyntaxError(0, e.byte, std::string("quality config ") + path + ": " + e.what());
  }
  return fromJson(j);
}

json QualityConfig::toJson() const {
  json j;
  j["home_namespaces"] = homeNamespaces;
  j["gold_standard"] = {{"classes", goldClasses}, {"properties", goldProperties}};
  if (linkableClass) j["interlinking"] = {{"class", *linkableClass}};
  if (completenessClass) j["property_completeness"] = {{"class", *completenessClass}, {"predicate", *completenessPredicate}};
  j["numeric_ranges"] = json::array();
  for (const auto& r : ranges) j["numeric_ranges"].push_back({{"predicate", r.predicate}, {"lower", r.lower}, {"upper", r.upper}});
  j["resolver"] = {{"mode", resolverModeName(resolver)}, {"allowlist", allowlist}, {"timeout_ms", liveTimeoutMs}};
  j["label_predicates"] = labelPredicates;
  return j;
}

bool resolveUri(const QualityConfig& cfg, std::string_view iri) {
  switch (cfg.resolver) {
    case ResolverMode::OfflineAllowlist: return inAny(iri, cfg.allowlist);
    case ResolverMode::Syntactic: return kg::isAbsoluteIri(iri);
    case ResolverMode::Live: {
#ifdef ONOKG_LIVE_RESOLVER
      static const std::regex url(R"(^(https?://[^/?#]+)([^#]*))");
      std::match_results<std::string_view::const_iterator> m;
      if (!std::regex_search(iri.begin(), iri.end(), m, url)) return false;
      try {
        httplib::Client client(m[1].str());
        client.set_follow_location(true);
        client.set_connection_timeout(std::chrono::milliseconds(cfg.liveTimeoutMs));
        client.set_read_timeout(std::chrono::milliseconds(cfg.liveTimeoutMs));
        const std::string path = m[2].length() ? m[2].str() : "/";
        auto res = client.Head(path);
        if (!res) {
          spdlog::warn("resolver: {} failed: {}", iri, httplib::to_string(res.error()));
          return false;
        }
        return res->status < 400;
      } catch (const std::exception& e) {
        spdlog::warn("resolver: {} failed: {}", iri, e.what());
        return false;
      }
#else
      spdlog::warn("resolver: live mode unavailable in this build; {} unresolved", iri);
      return false;
#endif
    }
  }
  return false;
}

json MetricResult::toJson() const {
  json j;
  j["name"] = name;
  j["dimension"] = dimension;
  j["kind"] = kind == MetricKind::Ratio ? "ratio" : "count";
  j["status"] = status == MetricStatus::Ok ? "ok" : "skipped";
  j["numerator"] = numerator;
  j["denominator"] = denominator;
  j["ratio"] = ratio ? json(*ratio) : json(nullptr);
  if (kind == MetricKind::Count && status == MetricStatus::Ok) j["count"] = numerator;
  j["vacuous"] = vacuous;
  j["sample"] = sample;
  if (!note.empty()) j["note"] = note;
  return j;
}

const MetricResult& QualityReport::at(std::string_view name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return m;
  }
  throw UnknownNameError("metric", std::string(name));
}

json QualityReport::toJson() const {
  json j;
  j["metrics"] = json::array();
  for (const auto& m : metrics) j["metrics"].push_back(m.toJson());
  return j;
}

std::string QualityReport::toTable() const {
  std::size_t width = 6;
  for (const auto& m : metrics) width = std::max(width, m.name.size());
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) { return s.size() < w ? s + std::string(w - s.size(), ' ') : s; };
  out << pad("metric", width) << "  " << pad("dimension", 12) << "  " << pad("value", 10) << "  fraction\n";
  for (const auto& m : metrics) {
    std::string value, fraction;
    if (m.status == MetricStatus::Skipped) {
      value = "skipped";
      fraction = m.note;
    } else if (m.kind == MetricKind::Count) {
      value = std::to_string(m.numerator);
      fraction = "of " + std::to_string(m.denominator);
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4f", *m.ratio);
      value = buf;
      fraction = std::to_string(m.numerator) + "/" + std::to_string(m.denominator) + (m.vacuous ? " (vacuous)" : "");
    }
    out << pad(m.name, width) << "  " << pad(m.dimension, 12) << "  " << pad(value, 10) << "  " << fraction << "\n";
  }
  return out.str();
}

const std::vector<std::string>& metricNames() {
  static const std::vector<std::string> names = {
      "schema_completeness",        "interlinking_completeness",   "property_completeness",
      "numeric_range_violations",   "extensional_conciseness",     "external_sameas_links",
      "datatype_compatibility",     "dereferenceable_uris",        "dereferenceable_back_links",
      "dereferenceable_forward_links", "coverage_detail",          "coverage_scope",
      "labeled_resources"};
  return names;
}

QualityReport assess(const kg::Graph& g, const QualityConfig& cfg) {
  cfg.validate();
  const auto s = snapshot(g);
  QualityReport r;
  r.metrics = {schemaCompleteness(g, cfg), interlinking(g, cfg), propertyCompleteness(g, cfg),
               numericRange(g, cfg),       conciseness(g, s),     externalSameAs(s, cfg),
               datatypes(s),               dereferenceable(s, cfg), ownLinks(s, cfg, true),
               ownLinks(s, cfg, false),    coverageDetail(s),     coverageScope(s),
               labeled(g, s, cfg)};
  return r;
}

}  // namespace onokg::quality
