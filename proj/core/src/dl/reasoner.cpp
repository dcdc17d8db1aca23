#include "onokg/dl/reasoner.h"

#include <algorithm>
#include <iterator>
#include <string_view>

#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/pitfalls.h"
#include "onokg/ontology/schema.h"

namespace onokg::dl {

using kg::Term;

const IdSet AboxIndex::kEmpty;

namespace {

IdSet intersect(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IdSet unite(const IdSet& a, const IdSet& b) {
  IdSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool has(const IdSet& s, std::uint64_t v) { return std::binary_search(s.begin(), s.end(), v); }

void normalize(IdSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool isSchemaPredicate(std::string_view iri) {
  for (auto p : {vocab::kRdfType, vocab::kRdfsSubClassOf, vocab::kRdfsLabel, vocab::kRdfsComment,
                 vocab::kRdfsDomain, vocab::kRdfsRange, vocab::kOwlIntersectionOf, vocab::kRdfFirst,
                 vocab::kRdfRest}) {
    if (iri == p) return true;
  }
  return false;
}

}  // namespace

AboxIndex::AboxIndex(const kg::Graph& g) : graph_(g) {
  auto typeId = g.lookup(Term::iri(vocab::kRdfType));
  auto subId = g.lookup(Term::iri(vocab::kRdfsSubClassOf));
  auto owlClassId = g.lookup(Term::iri(vocab::kOwlClass));
  std::unordered_map<std::uint64_t, bool> literal;
  std::unordered_map<std::uint64_t, bool> schemaPred;
  auto isLiteral = [&](std::uint64_t id) {
    auto it = literal.find(id);
    if (it != literal.end()) return it->second;
    return literal[id] = g.decode(kg::TermId{id}).isLiteral();
  };
  auto isSchema = [&](std::uint64_t id) {
    auto it = schemaPred.find(id);
    if (it != schemaPred.end()) return it->second;
    return schemaPred[id] = isSchemaPredicate(g.decode(kg::TermId{id}).lexical());
  };

  for (const auto& t : g.allIds()) {
    const auto s = t.s.value, p = t.p.value, o = t.o.value;
    const bool objLiteral = isLiteral(o);
    domain_.push_back(s);
    if (!objLiteral) domain_.push_back(o);
    forward_[p][s].push_back(o);
    backward_[p][o].push_back(s);
    if (typeId && p == typeId->value && !objLiteral) {
      typed_[o].push_back(s);
      classes_.insert(o);
      if (owlClassId && o == owlClassId->value) classes_.insert(s);
    } else if (subId && p == subId->value && !objLiteral) {
      subclasses_[o].push_back(s);
      classes_.insert(s);
      classes_.insert(o);
    }
    if (!isSchema(p)) {
      individualUse_.insert(s);
      if (!objLiteral) individualUse_.insert(o);
    }
  }
  normalize(domain_);
  for (auto* adj : {&forward_, &backward_}) {
    for (auto& [p, m] : *adj) {
      for (auto& [n, v] : m) normalize(v);
    }
  }
  for (auto& [c, v] : typed_) normalize(v);
  for (auto& [c, v] : subclasses_) normalize(v);
}

std::optional<std::uint64_t> AboxIndex::idOf(const Term& t) const {
  if (auto id = graph_.lookup(t)) return id->value;
  return std::nullopt;
}

IdSet AboxIndex::atomic(const Term& name) const {
  auto root = idOf(name);
  if (!root) return {};
  IdSet out;
  std::set<std::uint64_t> seen{*root};
  std::vector<std::uint64_t> work{*root};
  while (!work.empty()) {
    auto c = work.back();
    work.pop_back();
    if (auto it = typed_.find(c); it != typed_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    if ((!classes_.count(c) || individualUse_.count(c)) && has(domain_, c)) out.push_back(c);
    if (auto it = subclasses_.find(c); it != subclasses_.end()) {
      for (auto sub : it->second) {
        if (seen.insert(sub).second) work.push_back(sub);
      }
    }
  }
  normalize(out);
  return out;
}

const IdSet& AboxIndex::successors(std::uint64_t node, const Role& role) const {
  auto p = idOf(role.property);
  if (!p) return kEmpty;
  const auto& adj = role.inverse ? backward_ : forward_;
  auto pit = adj.find(*p);
  if (pit == adj.end()) return kEmpty;
  auto nit = pit->second.find(node);
  return nit == pit->second.end() ? kEmpty : nit->second;
}

IdSet AboxIndex::evaluate(const ClassExpression& e) const {
  switch (e.kind) {
    case ExprKind::Atomic: return atomic(e.name);
    case ExprKind::And: {
      IdSet acc = evaluate(*e.operands.front());
      for (std::size_t i = 1; i < e.operands.size() && !acc.empty(); ++i) acc = intersect(acc, evaluate(*e.operands[i]));
      return acc;
    }
    case ExprKind::Or: {
      IdSet acc;
      for (const auto& op : e.operands) acc = unite(acc, evaluate(*op));
      return acc;
    }
    case ExprKind::Some:
    case ExprKind::Only: {
      const IdSet filler = evaluate(*e.filler);
      IdSet out;
      for (auto x : domain_) {
        const auto& succ = successors(x, e.role);
        bool keep;
        if (e.kind == ExprKind::Some) {
          keep = std::any_of(succ.begin(), succ.end(), [&](auto y) { return has(filler, y); });
        } else {
          keep = std::all_of(succ.begin(), succ.end(), [&](auto y) { return has(filler, y); });
        }
        if (keep) out.push_back(x);
      }
      return out;
    }
    case ExprKind::MinCard:
    case ExprKind::MaxCard: {
      IdSet out;
      for (auto x : domain_) {
        auto n = successors(x, e.role).size();
        if (e.kind == ExprKind::MinCard ? n >= e.count : n <= e.count) out.push_back(x);
      }
      return out;
    }
  }
  return {};
}

std::vector<Term> AboxIndex::decode(const IdSet& ids) const {
  std::vector<Term> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(graph_.decode(kg::TermId{id}));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> instances(const kg::Graph& g, const ClassExpression& e) {
  AboxIndex idx(g);
  return idx.decode(idx.evaluate(e));
}

bool SubclassClosure::holds(const Term& sub, const Term& super) const {
  auto it = supers.find(sub);
  return it != supers.end() && it->second.count(super) > 0;
}

std::size_t SubclassClosure::pairCount() const {
  std::size_t n = 0;
  for (const auto& [c, s] : supers) n += s.size();
  return n;
}

namespace {

std::string cycleText(const std::vector<Term>& cycle) {
  std::string out;
  for (const auto& c : cycle) out += std::string(kg::localName(c.lexical())) + " -> ";
  if (!cycle.empty()) out += std::string(kg::localName(cycle.front().lexical()));
  return out;
}

}  // namespace

HierarchyCycleError::HierarchyCycleError(std::vector<Term> cycle)
    : Error("subclass hierarchy has a cycle: " + cycleText(cycle)), cycle_(std::move(cycle)) {}

SubclassClosure subclassClosure(const kg::Graph& g) {
  auto cycles = ontology::findSubclassCycles(g);
  if (!cycles.empty()) throw HierarchyCycleError(cycles.front());

  const Term type = Term::iri(vocab::kRdfType);
  const Term sub = Term::iri(vocab::kRdfsSubClassOf);
  std::map<Term, std::set<Term>> direct;
  std::set<Term> classes;
  for (const auto& t : g.match(std::nullopt, type, Term::iri(vocab::kOwlClass))) classes.insert(t.subject);
  for (const auto& t : g.match(std::nullopt, sub, std::nullopt)) {
    if (t.object.isLiteral()) continue;
    classes.insert(t.subject);
    classes.insert(t.object);
    direct[t.subject].insert(t.object);
  }
  SubclassClosure out;
  for (const auto& c : classes) {
    auto& up = out.supers[c];
    std::vector<Term> work{c};
    up.insert(c);
    while (!work.empty()) {
      Term x = work.back();
      work.pop_back();
      for (const auto& y : direct[x]) {
        if (up.insert(y).second) work.push_back(y);
      }
    }
  }
  return out;
}

Rule oncogeneRule() {
  const auto& s = ontology::schema();
  return {"oncogene-rule", s.oncogene, s.causes, s.cancer};
}

std::optional<Rule> namedRule(std::string_view name) {
  if (name == "oncogene-rule") return oncogeneRule();
  return std::nullopt;
}

Derivation deduceSyllogism(const kg::Graph& g, const Rule& rule, const Term& instance) {
  Derivation d;
  const std::string inst = instance.display();
  const std::string a = rule.classA.display();
  const std::string p = rule.property.display();
  const std::string b = rule.classB.display();

  // classA and everything below it
  std::set<Term> below{rule.classA};
  std::vector<Term> work{rule.classA};
  const Term sub = Term::iri(vocab::kRdfsSubClassOf);
  while (!work.empty()) {
    Term x = work.back();
    work.pop_back();
    for (const auto& t : g.match(std::nullopt, sub, x)) {
      if (below.insert(t.subject).second) work.push_back(t.subject);
    }
  }

  std::optional<std::string> membership;
  const Term type = Term::iri(vocab::kRdfType);
  const Term isA = ontology::schema().isA;
  for (const auto& [pred, via] : {std::pair{type, "rdf:type"}, std::pair{isA, "isA"}}) {
    if (membership) break;
    for (const auto& t : g.match(instance, pred, std::nullopt)) {
      if (!below.count(t.object)) continue;
      std::string how = std::string("asserted ") + via + " " + t.object.display();
      if (t.object != rule.classA) how += ", " + t.object.display() + " subClassOf* " + a;
      const bool vowel = !a.empty() && std::string_view("AEIOUaeiou").find(a.front()) != std::string_view::npos;
      membership = inst + (vowel ? " is an " : " is a ") + a + " (" + how + ")";
      break;
    }
  }
  if (!membership) return d;
  d.trace.push_back(*membership);
  d.trace.push_back("every " + a + " " + p + " " + b + " (rule " + rule.name + ")");
  d.derived = kg::Triple{instance, rule.property, rule.classB};
  return d;
}

bool persistDerivation(kg::Graph& g, const Derivation& d) {
  if (!d.derived) return false;
  const auto& t = *d.derived;
  bool added = g.insert(t);
  const std::string key = t.subject.toNTriples() + t.predicate.toNTriples() + t.object.toNTriples();
  Term stmt = ontology::ono("Derived_" + text::hex64(text::fnv1a(key)));
  g.insert({stmt, Term::iri(vocab::kRdfType), Term::iri(vocab::kRdfStatement)});
  g.insert({stmt, Term::iri(vocab::kRdfSubject), t.subject});
  g.insert({stmt, Term::iri(vocab::kRdfPredicate), t.predicate});
  g.insert({stmt, Term::iri(vocab::kRdfObject), t.object});
  g.insert({stmt, ontology::schema().provenance, Term::literal("derived")});
  return added;
}

std::string formatTrace(const Derivation& d) {
  if (!d.derived) return "no derivation: membership premise not found\n";
  std::string out;
  for (std::size_t i = 0; i < d.trace.size(); ++i) {
    out += "premise " + std::to_string(i + 1) + ": " + d.trace[i] + "\n";
  }
  const auto& t = *d.derived;
  out += "  therefore: " + t.subject.display() + " " + t.predicate.display() + " " + t.object.display() + "\n";
  return out;
}

}  // namespace onokg::dl
