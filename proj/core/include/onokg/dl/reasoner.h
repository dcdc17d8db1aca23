#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "onokg/dl/expression.h"
#include "onokg/kg/graph.h"

namespace onokg::dl {

using IdSet = std::vector<std::uint64_t>;  // sorted, unique term ids

// Closed-world view of a graph for instance retrieval. Built once per graph
// version; read-only afterwards and safe to share across threads.
//
// The domain is every non-literal term occurring as a subject or object.
// Atomic(X) is the set of rdf:type instances of every class C with C ⊑* X,
// plus each such C itself when it is used as an individual: either it is not
// a class at all, or it occurs in a non-schema triple.
class AboxIndex {
 public:
  explicit AboxIndex(const kg::Graph& g);

  const kg::Graph& graph() const { return graph_; }
  const IdSet& domain() const { return domain_; }

  IdSet atomic(const kg::Term& name) const;
  // Distinct successors (objects, literals included), or subjects when the
  // role is inverse.
  const IdSet& successors(std::uint64_t node, const Role& role) const;
  IdSet evaluate(const ClassExpression& e) const;

  std::vector<kg::Term> decode(const IdSet& ids) const;

 private:
  using Adjacency = std::unordered_map<std::uint64_t, std::unordered_map<std::uint64_t, IdSet>>;

  std::optional<std::uint64_t> idOf(const kg::Term& t) const;

  const kg::Graph& graph_;
  IdSet domain_;
  Adjacency forward_;   // p -> s -> objects
  Adjacency backward_;  // p -> o -> subjects
  std::unordered_map<std::uint64_t, IdSet> subclasses_;  // C -> direct subclasses
  std::unordered_map<std::uint64_t, IdSet> typed_;       // C -> rdf:type instances
  std::set<std::uint64_t> classes_;
  std::set<std::uint64_t> individualUse_;
  static const IdSet kEmpty;
};

// Sorted instances of the expression in the graph.
std::vector<kg::Term> instances(const kg::Graph& g, const ClassExpression& e);

// Subclass relation closed under reflexivity and transitivity, over every
// class of the graph.
struct SubclassClosure {
  std::map<kg::Term, std::set<kg::Term>> supers;

  bool holds(const kg::Term& sub, const kg::Term& super) const;
  std::size_t pairCount() const;
};

class HierarchyCycleError : public Error {
 public:
  explicit HierarchyCycleError(std::vector<kg::Term> cycle);
  const std::vector<kg::Term>& cycle() const { return cycle_; }

 private:
  std::vector<kg::Term> cycle_;
};

// Throws HierarchyCycleError naming the first cycle found.
SubclassClosure subclassClosure(const kg::Graph& g);

// "every classA has property classB"
struct Rule {
  std::string name;
  kg::Term classA;
  kg::Term property;
  kg::Term classB;
};

Rule oncogeneRule();  // named "oncogene-rule": Oncogene causes Cancer
std::optional<Rule> namedRule(std::string_view name);

struct Derivation {
  std::optional<kg::Triple> derived;
  std::vector<std::string> trace;  // membership premise, rule premise
  bool derivedProvenance = true;

  bool ok() const { return derived.has_value(); }
};

// Derives (instance, property, classB) when the instance belongs to classA
// through rdf:type or isA (with subclass closure). The graph is not modified.
Derivation deduceSyllogism(const kg::Graph& g, const Rule& rule, const kg::Term& instance);

// Inserts the derived triple plus a reified statement flagged as derived.
// Returns false when the triple was already present.
bool persistDerivation(kg::Graph& g, const Derivation& d);

// Indented proof text; the last line states the conclusion.
std::string formatTrace(const Derivation& d);

}  // namespace onokg::dl
