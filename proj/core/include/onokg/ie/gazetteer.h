#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "onokg/ie/iob.h"

namespace onokg::ie {

// Known surface forms per entity type, keyed by normalizeSurface.
class Gazetteer {
 public:
  static constexpr std::size_t kMaxWords = 8;

  void add(std::string_view surface, EntityType type);
  bool contains(std::string_view surface, EntityType type) const;
  std::size_t size() const { return entries_.size(); }
  // (surface, type) pairs in key order.
  std::vector<std::pair<std::string, EntityType>> entries() const;

  struct Hit {
    WordSpan span;
    EntityType type;
  };
  // Leftmost-longest matches per type over a word sequence; hits of
  // different types may overlap.
  std::vector<Hit> match(const std::vector<std::string>& words) const;

  // True when a hit covers both word w-1 and word w, so a cut before w would
  // split it.
  static bool splits(const std::vector<Hit>& hits, std::size_t w);

 private:
  std::map<std::string, std::pair<std::string, std::set<EntityType>>> entries_;  // key -> (surface, types)
};

}  // namespace onokg::ie
