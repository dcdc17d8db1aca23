#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "onokg/kg/term.h"

namespace onokg::kg {

// Dictionary id of a term. Ids are assigned densely from 1 in first-insertion
// order; 0 is never a valid id.
struct TermId {
  std::uint64_t value = 0;

  explicit operator bool() const { return value != 0; }
  friend auto operator<=>(const TermId&, const TermId&) = default;
};

struct IdTriple {
  TermId s, p, o;
  friend auto operator<=>(const IdTriple&, const IdTriple&) = default;
};

// In-memory triple store: a term dictionary plus SPO, POS and OSP indexes
// over the same triple set. Readers and writers follow a many-readers /
// single-writer contract backed by a shared mutex, so a Graph may be shared
// across threads. Copies are deep.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph& other);
  Graph(Graph&& other) noexcept;
  Graph& operator=(const Graph& other);
  Graph& operator=(Graph&& other) noexcept;

  // Returns true iff the triple was not present. Throws ValidationError for
  // literal subjects and non-IRI predicates.
  bool insert(const Triple& t);
  // Returns true iff the triple was present.
  bool remove(const Triple& t);
  bool contains(const Triple& t) const;

  // Triples matching every bound position, ordered by (s, p, o) ids.
  std::vector<Triple> match(const std::optional<Term>& s,
                            const std::optional<Term>& p,
                            const std::optional<Term>& o) const;
  std::vector<IdTriple> matchIds(std::optional<TermId> s,
                                 std::optional<TermId> p,
                                 std::optional<TermId> o) const;
  std::size_t count(std::optional<TermId> s, std::optional<TermId> p,
                    std::optional<TermId> o) const;

  // All triples in SPO order.
  std::vector<IdTriple> allIds() const;
  std::vector<Triple> all() const;

  std::optional<TermId> lookup(const Term& t) const;
  // Id for the term, allocating one when absent.
  TermId encode(const Term& t);
  Term decode(TermId id) const;
  Triple decode(const IdTriple& t) const;

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::size_t dictionarySize() const;

  // A blank node whose label is not yet used by this graph. The label is
  // `hint` when free, otherwise `hint` with a numeric suffix.
  Term freshBlank(std::string_view hint = "b");

  // Consistency check of the three indexes: identical counts and membership
  // of every SPO triple in POS and OSP.
  bool indexesCoherent() const;

  friend bool sameTriples(const Graph& a, const Graph& b);

 private:
  using Key = std::array<std::uint64_t, 3>;

  TermId encodeLocked(const Term& t);
  std::optional<TermId> lookupLocked(const Term& t) const;
  void copyFrom(const Graph& other);

  mutable std::shared_mutex mutex_;
  std::deque<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
  std::set<Key> spo_;
  std::set<Key> pos_;
  std::set<Key> osp_;
  std::uint64_t blankCounter_ = 0;
};

// Triple-set equality by term value (not by id).
bool sameTriples(const Graph& a, const Graph& b);

}  // namespace onokg::kg
