#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "onokg/kg/graph.h"
#include "onokg/sparql/query.h"

namespace onokg::sparql {

struct SolutionTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<kg::Term>>> rows;  // nullopt = unbound

  // IRIs in full, literals by lexical form, unbound as the empty field.
  std::string toCsv() const;
  // {"header":[...],"rows":[[...]]}; unbound cells are null.
  std::string toJson() const;
  // Aligned text table with compacted IRIs.
  std::string toText(const kg::PrefixTable& prefixes = kg::PrefixTable::standard()) const;
};

// Reference semantics: natural join of pattern matches, VALUES and subquery
// tables; filters with error-as-false; GROUP BY collapses each group to its
// key; projection; DISTINCT. Rows are sorted by binding ids (unbound first).
SolutionTable evaluate(const kg::Graph& g, const SelectQuery& q);

// Three-valued filter result.
enum class Truth { False, True, Error };

struct PackResult {
  std::string id;    // file stem
  std::string path;
  SolutionTable table;
  double millis = 0;
};

// Runs every *.rq file of `dir` in name order. A parse failure propagates.
std::vector<PackResult> runQueryPack(const kg::Graph& g, const std::string& dir);

}  // namespace onokg::sparql
