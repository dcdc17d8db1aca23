#include "onokg/ontology/pitfalls.h"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>

#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"

namespace onokg::ontology {

using kg::Term;

namespace {

using Adjacency = std::map<Term, std::set<Term>>;

Adjacency subclassEdges(const kg::Graph& g) {
  Adjacency adj;
  for (const auto& t : g.match(std::nullopt, Term::iri(vocab::kRdfsSubClassOf), std::nullopt)) {
    if (t.object.isLiteral()) continue;
    adj[t.subject].insert(t.object);
    adj.try_emplace(t.object);
  }
  return adj;
}

// Tarjan's algorithm, iterative over an explicit stack of frames.
std::vector<std::vector<Term>> stronglyConnected(const Adjacency& adj) {
  std::map<Term, std::size_t> index, low;
  std::set<Term> onStack;
  std::vector<Term> stack;
  std::vector<std::vector<Term>> out;
  std::size_t counter = 0;

  struct Frame {
    const Term* node;
    std::set<Term>::const_iterator next;
  };
  for (const auto& [root, _] : adj) {
    if (index.count(root)) continue;
    std::vector<Frame> frames;
    auto open = [&](const Term& v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      onStack.insert(v);
      frames.push_back({&adj.find(v)->first, adj.find(v)->second.begin()});
    };
    open(root);
    while (!frames.empty()) {
      auto& f = frames.back();
      const auto& succ = adj.find(*f.node)->second;
      if (f.next != succ.end()) {
        const Term& w = *f.next++;
        if (!index.count(w)) {
          open(w);
        } else if (onStack.count(w)) {
          low[*f.node] = std::min(low[*f.node], index[w]);
        }
        continue;
      }
      const Term v = *f.node;
      frames.pop_back();
      if (!frames.empty()) {
        const Term& parent = *frames.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<Term> comp;
        while (true) {
          Term w = stack.back();
          stack.pop_back();
          onStack.erase(w);
          comp.push_back(w);
          if (w == v) break;
        }
        if (comp.size() > 1) {
          std::sort(comp.begin(), comp.end());
          out.push_back(std::move(comp));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> rdfList(const kg::Graph& g, Term head) {
  const Term first = Term::iri(vocab::kRdfFirst);
  const Term rest = Term::iri(vocab::kRdfRest);
  const Term nil = Term::iri(vocab::kRdfNil);
  std::vector<Term> out;
  std::set<Term> seen;
  while (head != nil && seen.insert(head).second) {
    auto f = g.match(head, first, std::nullopt);
    if (f.empty()) break;
    out.push_back(f.front().object);
    auto r = g.match(head, rest, std::nullopt);
    if (r.empty()) break;
    head = r.front().object;
  }
  return out;
}

// Asserted instances of `c` and of every class below it.
std::set<Term> instancesOf(const kg::Graph& g, const Term& c) {
  const Term sub = Term::iri(vocab::kRdfsSubClassOf);
  const Term type = Term::iri(vocab::kRdfType);
  std::set<Term> classes{c};
  std::vector<Term> work{c};
  while (!work.empty()) {
    Term x = work.back();
    work.pop_back();
    for (const auto& t : g.match(std::nullopt, sub, x)) {
      if (classes.insert(t.subject).second) work.push_back(t.subject);
    }
  }
  std::set<Term> out;
  for (const auto& k : classes) {
    for (const auto& t : g.match(std::nullopt, type, k)) out.insert(t.subject);
  }
  return out;
}

bool inHome(const Term& t, const std::vector<std::string>& home) {
  if (!t.isIri()) return false;
  return std::any_of(home.begin(), home.end(),
                     [&](const std::string& ns) { return text::startsWith(t.lexical(), ns); });
}

std::string localPart(const Term& t, const std::vector<std::string>& home) {
  for (const auto& ns : home) {
    if (text::startsWith(t.lexical(), ns)) return t.lexical().substr(ns.size());
  }
  return std::string(kg::localName(t.lexical()));
}

}  // namespace

std::vector<std::vector<Term>> findSubclassCycles(const kg::Graph& g) {
  return stronglyConnected(subclassEdges(g));
}

PitfallReport checkOntologyPitfalls(const kg::Graph& g, const PitfallConfig& cfg) {
  PitfallReport report;
  report.cycles = findSubclassCycles(g);

  std::vector<std::string> home = cfg.homeNamespaces;
  if (home.empty()) home.emplace_back(vocab::kOno);
  const Term type = Term::iri(vocab::kRdfType);

  std::set<Term> classes;
  for (const auto& t : g.match(std::nullopt, type, Term::iri(vocab::kOwlClass))) classes.insert(t.subject);
  for (const auto& t : g.match(std::nullopt, Term::iri(vocab::kRdfsSubClassOf), std::nullopt)) {
    classes.insert(t.subject);
    classes.insert(t.object);
  }
  std::set<Term> properties;
  for (auto kind : {vocab::kOwlObjectProperty, vocab::kOwlDatatypeProperty, vocab::kRdfProperty}) {
    for (const auto& t : g.match(std::nullopt, type, Term::iri(kind))) properties.insert(t.subject);
  }
  const std::regex classRe(cfg.classPattern);
  const std::regex propRe(cfg.propertyPattern);
  for (const auto& c : classes) {
    if (inHome(c, home) && !std::regex_match(localPart(c, home), classRe)) {
      report.naming.push_back({c, "class", "UpperCamelCase"});
    }
  }
  for (const auto& p : properties) {
    if (inHome(p, home) && !std::regex_match(localPart(p, home), propRe)) {
      report.naming.push_back({p, "property", "lowerCamelCase"});
    }
  }

  const Term intersection = Term::iri(vocab::kOwlIntersectionOf);
  std::set<Term> props;
  for (auto role : {vocab::kRdfsDomain, vocab::kRdfsRange}) {
    for (const auto& t : g.match(std::nullopt, Term::iri(role), std::nullopt)) props.insert(t.subject);
  }
  for (const auto& p : props) {
    for (auto [roleIri, roleName] : {std::pair{vocab::kRdfsDomain, "domain"}, std::pair{vocab::kRdfsRange, "range"}}) {
      std::vector<Term> members;
      auto decl = g.match(p, Term::iri(roleIri), std::nullopt);
      if (decl.size() > 1) {
        for (const auto& d : decl) members.push_back(d.object);
      } else if (decl.size() == 1) {
        for (const auto& i : g.match(decl.front().object, intersection, std::nullopt)) {
          auto listed = rdfList(g, i.object);
          members.insert(members.end(), listed.begin(), listed.end());
        }
      }
      if (members.size() < 2) continue;
      std::set<Term> common = instancesOf(g, members.front());
      for (std::size_t k = 1; k < members.size() && !common.empty(); ++k) {
        auto next = instancesOf(g, members[k]);
        std::set<Term> keep;
        std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                              std::inserter(keep, keep.begin()));
        common = std::move(keep);
      }
      if (common.empty()) {
        std::sort(members.begin(), members.end());
        report.intersections.push_back({p, roleName, members});
      }
    }
  }
  return report;
}

}  // namespace onokg::ontology
