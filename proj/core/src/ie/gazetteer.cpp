#include "onokg/ie/gazetteer.h"

#include "onokg/common/error.h"
#include "onokg/ie/preprocess.h"

namespace onokg::ie {

void Gazetteer::add(std::string_view surface, EntityType type) {
  auto key = normalizeSurface(surface);
  if (key.empty()) throw ValidationError("gazetteer", "empty surface form");
  auto& e = entries_[key];
  if (e.first.empty()) e.first = std::string(surface);
  e.second.insert(type);
}

bool Gazetteer::contains(std::string_view surface, EntityType type) const {
  auto it = entries_.find(normalizeSurface(surface));
  return it != entries_.end() && it->second.second.count(type) > 0;
}

std::vector<std::pair<std::string, EntityType>> Gazetteer::entries() const {
  std::vector<std::pair<std::string, EntityType>> out;
  for (const auto& [key, e] : entries_) {
    for (auto t : e.second) out.emplace_back(e.first, t);
  }
  return out;
}

std::vector<Gazetteer::Hit> Gazetteer::match(const std::vector<std::string>& words) const {
  std::vector<std::string> keys;
  keys.reserve(words.size());
  for (const auto& w : words) keys.push_back(normalizeSurface(w));
  std::vector<Hit> out;
  for (auto type : {EntityType::Disease, EntityType::Gene}) {
    std::size_t w = 0;
    while (w < words.size()) {
      std::size_t best = 0;
      std::string key;
      for (std::size_t n = 1; n <= kMaxWords && w + n <= words.size(); ++n) {
        if (!keys[w + n - 1].empty()) {
          if (!key.empty()) key += ' ';
          key += keys[w + n - 1];
        }
        auto it = entries_.find(key);
        if (it != entries_.end() && it->second.second.count(type)) best = n;
      }
      if (best) {
        out.push_back({{w, w + best}, type});
        w += best;
      } else {
        ++w;
      }
    }
  }
  return out;
}

bool Gazetteer::splits(const std::vector<Hit>& hits, std::size_t w) {
  for (const auto& h : hits) {
    if (h.span.begin < w && w < h.span.end) return true;
  }
  return false;
}

}  // namespace onokg::ie
