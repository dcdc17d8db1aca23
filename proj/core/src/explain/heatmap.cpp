#include "onokg/explain/heatmap.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "onokg/common/error.h"

namespace onokg::explain {

Heatmap makeHeatmap(std::vector<std::string> tokens, std::vector<double> scores) {
  if (tokens.size() != scores.size()) throw DimensionError(tokens.size(), scores.size(), "heatmap scores");
  Heatmap h;
  double m = 0;
  for (double s : scores) {
    if (!std::isfinite(s)) throw NumericError("non-finite heatmap score");
    m = std::max(m, std::abs(s));
  }
  h.intensity.assign(scores.size(), 0.0);
  if (m > 0) {
    for (std::size_t i = 0; i < scores.size(); ++i) h.intensity[i] = std::abs(scores[i]) / m;
  }
  h.tokens = std::move(tokens);
  h.raw = std::move(scores);
  return h;
}

namespace {

int bucket(double intensity) { return static_cast<int>(std::lround(intensity * 4.0)); }

std::string formatScore(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string renderTerminal(const Heatmap& h, bool colour) {
  // xterm-256 backgrounds from pale to saturated.
  static const int red[5] = {255, 224, 217, 203, 196};
  static const int blue[5] = {255, 189, 153, 111, 21};
  std::string out;
  for (std::size_t i = 0; i < h.tokens.size(); ++i) {
    if (i) out += ' ';
    const int b = bucket(h.intensity[i]);
    const int c = h.raw[i] >= 0 ? red[b] : blue[b];
    out += colour ? "\x1b[30;48;5;" + std::to_string(c) + "m" + h.tokens[i] + "\x1b[0m" : h.tokens[i];
  }
  out += "\n# scores:";
  for (double v : h.raw) out += " " + formatScore(v);
  out += "\n";
  return out;
}

std::string htmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string renderHtml(const Heatmap& h, const std::string& caption) {
  std::string out = "<div class=\"onokg-heatmap\">\n";
  if (!caption.empty()) out += "<p>" + htmlEscape(caption) + "</p>\n";
  for (std::size_t i = 0; i < h.tokens.size(); ++i) {
    char style[80];
    std::snprintf(style, sizeof style, "background-color: rgba(%s, %.3f)", h.raw[i] >= 0 ? "220, 40, 40" : "40, 80, 220",
                  h.intensity[i]);
    out += "<span style=\"" + std::string(style) + "\" data-score=\"" + formatScore(h.raw[i]) + "\">" + htmlEscape(h.tokens[i]) +
           "</span>\n";
  }
  out += "</div>\n";
  return out;
}

nlohmann::json relevanceJson(const Heatmap& h, Method method, double epsilon, double delta) {
  return {{"tokens", h.tokens}, {"scores", h.raw}, {"method", methodName(method)}, {"epsilon", epsilon}, {"delta", delta}};
}

}  // namespace onokg::explain
