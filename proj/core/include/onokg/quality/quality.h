#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "onokg/kg/graph.h"

namespace onokg::quality {

enum class ResolverMode { OfflineAllowlist, Syntactic, Live };

std::string_view resolverModeName(ResolverMode m);
// Throws ValidationError for an unknown name.
ResolverMode parseResolverMode(std::string_view s);

struct NumericRange {
  std::string predicate;
  double lower = 0;
  double upper = 0;
};

// Every IRI field holds a full IRI. Empty optional parameters leave the
// metrics that need them unconfigured, which reports them as skipped.
struct QualityConfig {
  // Namespaces owned by the assessed dataset. Any other IRI outside the W3C
  // vocabulary namespaces counts as foreign.
  std::vector<std::string> homeNamespaces;
  std::vector<std::string> goldClasses;
  std::vector<std::string> goldProperties;
  // Instances of this class are the resources expected to be interlinked.
  std::optional<std::string> linkableClass;
  std::optional<std::string> completenessClass;
  std::optional<std::string> completenessPredicate;
  std::vector<NumericRange> ranges;
  ResolverMode resolver = ResolverMode::OfflineAllowlist;
  std::vector<std::string> allowlist;
  int liveTimeoutMs = 3000;
  std::vector<std::string> labelPredicates;  // defaults to rdfs:label and skos:prefLabel

  // Home and allowlist for ono/norm, the ontology schema as gold standard,
  // Biomarker as the linkable class and hasEvidence completeness on Biomarker.
  static QualityConfig ontologyDefaults();

  // Throws ValidationError for lower > upper, non-finite bounds, a
  // half-configured property completeness pair or a live resolver when the
  // build lacks network support.
  void validate() const;

  // Keys: prefixes, home_namespaces, gold_standard {classes, properties} or
  // the string "ono-schema", interlinking {class}, property_completeness
  // {class, predicate}, numeric_ranges [{predicate, lower, upper}], resolver
  // {mode, allowlist, timeout_ms}, label_predicates. Names may be prefixed
  // with the standard or the declared prefixes. The result is validated.
  static QualityConfig fromJson(const nlohmann::json& j);
  static QualityConfig load(const std::string& path);
  nlohmann::json toJson() const;
};

// True when the resolver accepts the IRI. Live-mode failures are logged and
// count as unresolved.
bool resolveUri(const QualityConfig& cfg, std::string_view iri);

enum class MetricKind { Ratio, Count };
enum class MetricStatus { Ok, Skipped };

struct MetricResult {
  std::string name;
  std::string dimension;
  MetricKind kind = MetricKind::Ratio;
  MetricStatus status = MetricStatus::Ok;
  std::size_t numerator = 0;    // the count for Count metrics
  std::size_t denominator = 0;  // the population for Count metrics
  // Ratio metrics only: numerator / denominator, or 1 with vacuous set when
  // the denominator is 0.
  std::optional<double> ratio;
  bool vacuous = false;
  std::vector<std::string> sample;  // offending items, at most kMaxSample
  std::string note;

  static constexpr std::size_t kMaxSample = 100;

  nlohmann::json toJson() const;
};

struct QualityReport {
  std::vector<MetricResult> metrics;

  // Throws UnknownNameError.
  const MetricResult& at(std::string_view name) const;
  nlohmann::json toJson() const;
  std::string toTable() const;
};

// Metric names in report order.
const std::vector<std::string>& metricNames();

// Validates the config and computes every metric. Unconfigured metrics are
// skipped, never fatal.
QualityReport assess(const kg::Graph& g, const QualityConfig& cfg);

// Datatype validators. Return nullopt for datatypes without a validator.
std::optional<bool> lexicalFormValid(std::string_view lexical, std::string_view datatype);

}  // namespace onokg::quality
