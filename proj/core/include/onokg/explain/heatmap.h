#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onokg/explain/attribution.h"

namespace onokg::explain {

// Tokens with signed raw scores and intensities |score| / max |score|. An
// all-zero map has intensity 0 everywhere.
struct Heatmap {
  std::vector<std::string> tokens;
  std::vector<double> raw;
  std::vector<double> intensity;  // in [0, 1]
};

// Throws DimensionError when the lengths differ.
Heatmap makeHeatmap(std::vector<std::string> tokens, std::vector<double> scores);

// Background colour per token from five intensity buckets, red for positive
// and blue for negative scores; a trailing "# scores:" line carries the raw
// values. Without colour the tokens are printed plain.
std::string renderTerminal(const Heatmap& h, bool colour = true);
// Inline-styled spans with the raw score in a data-score attribute.
std::string renderHtml(const Heatmap& h, const std::string& caption = "");

// {"tokens":[...],"scores":[...],"method":...,"epsilon":...,"delta":...}
nlohmann::json relevanceJson(const Heatmap& h, Method method, double epsilon, double delta);

std::string htmlEscape(const std::string& s);

}  // namespace onokg::explain
