#pragma once

#include <random>
#include <string>

#include "onokg/dl/expression.h"
#include "onokg/kg/graph.h"

namespace onokg::testing {

inline constexpr const char* kEx = "http://example.org/";

kg::Term ex(const std::string& local);

// Small graph over a fixed vocabulary: classes C0..C5 with an acyclic
// hierarchy, individuals i0..i19, object properties p0..p3, labels, integer
// values under ex:val, and classes reused as individuals through p0.
kg::Graph randomGraph(std::mt19937_64& rng, std::size_t maxTriples = 200);

// Random class expression over the same vocabulary, depth-bounded.
dl::ExprPtr randomExpression(std::mt19937_64& rng, int depth = 3);

// Random query text from the supported subset grammar over the same
// vocabulary: 1-3 patterns, optional VALUES, FILTER, DISTINCT, GROUP BY and
// a one-level subquery.
std::string randomQuery(std::mt19937_64& rng);

}  // namespace onokg::testing
