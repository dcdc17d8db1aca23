#include "onokg/kg/graph.h"

#include <algorithm>
#include <mutex>

#include "onokg/common/error.h"

namespace onokg::kg {

namespace {

using Key = std::array<std::uint64_t, 3>;

// Visits keys of `index` whose first `bound` components equal `prefix`.
template <typename Fn>
void scanPrefix(const std::set<Key>& index, const Key& prefix, int bound, Fn&& fn) {
  if (bound == 0) {
    for (const auto& k : index) fn(k);
    return;
  }
  Key lo = prefix;
  for (int i = bound; i < 3; ++i) lo[static_cast<std::size_t>(i)] = 0;
  for (auto it = index.lower_bound(lo); it != index.end(); ++it) {
    for (int i = 0; i < bound; ++i) {
      if ((*it)[static_cast<std::size_t>(i)] != prefix[static_cast<std::size_t>(i)]) return;
    }
    fn(*it);
  }
}

}  // namespace

Graph::Graph(const Graph& other) {
  std::shared_lock lock(other.mutex_);
  copyFrom(other);
}

Graph::Graph(Graph&& other) noexcept {
  std::unique_lock lock(other.mutex_);
  terms_ = std::move(other.terms_);
  ids_ = std::move(other.ids_);
  spo_ = std::move(other.spo_);
  pos_ = std::move(other.pos_);
  osp_ = std::move(other.osp_);
  blankCounter_ = other.blankCounter_;
}

Graph& Graph::operator=(const Graph& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_, other.mutex_);
  copyFrom(other);
  return *this;
}

Graph& Graph::operator=(Graph&& other) noexcept {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_, other.mutex_);
  terms_ = std::move(other.terms_);
  ids_ = std::move(other.ids_);
  spo_ = std::move(other.spo_);
  pos_ = std::move(other.pos_);
  osp_ = std::move(other.osp_);
  blankCounter_ = other.blankCounter_;
  return *this;
}

void Graph::copyFrom(const Graph& other) {
  terms_ = other.terms_;
  ids_ = other.ids_;
  spo_ = other.spo_;
  pos_ = other.pos_;
  osp_ = other.osp_;
  blankCounter_ = other.blankCounter_;
}

TermId Graph::encodeLocked(const Term& t) {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  terms_.push_back(t);
  TermId id{terms_.size()};
  ids_.emplace(t, id);
  return id;
}

std::optional<TermId> Graph::lookupLocked(const Term& t) const {
  if (auto it = ids_.find(t); it != ids_.end()) return it->second;
  return std::nullopt;
}

bool Graph::insert(const Triple& t) {
  validate(t);
  std::unique_lock lock(mutex_);
  TermId s = encodeLocked(t.subject);
  TermId p = encodeLocked(t.predicate);
  TermId o = encodeLocked(t.object);
  if (!spo_.insert({s.value, p.value, o.value}).second) return false;
  pos_.insert({p.value, o.value, s.value});
  osp_.insert({o.value, s.value, p.value});
  return true;
}

bool Graph::remove(const Triple& t) {
  std::unique_lock lock(mutex_);
  auto s = lookupLocked(t.subject);
  auto p = lookupLocked(t.predicate);
  auto o = lookupLocked(t.object);
  if (!s || !p || !o) return false;
  if (spo_.erase({s->value, p->value, o->value}) == 0) return false;
  pos_.erase({p->value, o->value, s->value});
  osp_.erase({o->value, s->value, p->value});
  return true;
}

bool Graph::contains(const Triple& t) const {
  std::shared_lock lock(mutex_);
  auto s = lookupLocked(t.subject);
  auto p = lookupLocked(t.predicate);
  auto o = lookupLocked(t.object);
  if (!s || !p || !o) return false;
  return spo_.count({s->value, p->value, o->value}) > 0;
}

std::vector<IdTriple> Graph::matchIds(std::optional<TermId> s, std::optional<TermId> p,
                                      std::optional<TermId> o) const {
  std::vector<IdTriple> out;
  std::shared_lock lock(mutex_);
  const std::uint64_t sv = s ? s->value : 0;
  const std::uint64_t pv = p ? p->value : 0;
  const std::uint64_t ov = o ? o->value : 0;
  if (s && p && o) {
    if (spo_.count({sv, pv, ov})) out.push_back({*s, *p, *o});
    return out;
  }
  if (s && o) {
    scanPrefix(osp_, {ov, sv, 0}, 2, [&](const Key& k) {
      out.push_back({TermId{k[1]}, TermId{k[2]}, TermId{k[0]}});
    });
  } else if (s) {
    scanPrefix(spo_, {sv, pv, 0}, p ? 2 : 1, [&](const Key& k) {
      out.push_back({TermId{k[0]}, TermId{k[1]}, TermId{k[2]}});
    });
    return out;  // already SPO ordered
  } else if (p) {
    scanPrefix(pos_, {pv, ov, 0}, o ? 2 : 1, [&](const Key& k) {
      out.push_back({TermId{k[2]}, TermId{k[0]}, TermId{k[1]}});
    });
  } else if (o) {
    scanPrefix(osp_, {ov, 0, 0}, 1, [&](const Key& k) {
      out.push_back({TermId{k[1]}, TermId{k[2]}, TermId{k[0]}});
    });
  } else {
    out.reserve(spo_.size());
    for (const auto& k : spo_) out.push_back({TermId{k[0]}, TermId{k[1]}, TermId{k[2]}});
    return out;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Graph::count(std::optional<TermId> s, std::optional<TermId> p,
                         std::optional<TermId> o) const {
  if (!s && !p && !o) return size();
  return matchIds(s, p, o).size();
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::optional<TermId> si, pi, oi;
  {
    std::shared_lock lock(mutex_);
    if (s) {
      si = lookupLocked(*s);
      if (!si) return {};
    }
    if (p) {
      pi = lookupLocked(*p);
      if (!pi) return {};
    }
    if (o) {
      oi = lookupLocked(*o);
      if (!oi) return {};
    }
  }
  std::vector<Triple> out;
  for (const auto& t : matchIds(si, pi, oi)) out.push_back(decode(t));
  return out;
}

std::vector<IdTriple> Graph::allIds() const { return matchIds(std::nullopt, std::nullopt, std::nullopt); }

std::vector<Triple> Graph::all() const {
  std::vector<Triple> out;
  for (const auto& t : allIds()) out.push_back(decode(t));
  return out;
}

std::optional<TermId> Graph::lookup(const Term& t) const {
  std::shared_lock lock(mutex_);
  return lookupLocked(t);
}

TermId Graph::encode(const Term& t) {
  std::unique_lock lock(mutex_);
  return encodeLocked(t);
}

Term Graph::decode(TermId id) const {
  std::shared_lock lock(mutex_);
  if (id.value == 0 || id.value > terms_.size()) {
    throw Error("term id " + std::to_string(id.value) + " is not in the dictionary");
  }
  return terms_[id.value - 1];
}

Triple Graph::decode(const IdTriple& t) const {
  return {decode(t.s), decode(t.p), decode(t.o)};
}

std::size_t Graph::size() const {
  std::shared_lock lock(mutex_);
  return spo_.size();
}

std::size_t Graph::dictionarySize() const {
  std::shared_lock lock(mutex_);
  return terms_.size();
}

Term Graph::freshBlank(std::string_view hint) {
  std::unique_lock lock(mutex_);
  std::string base = hint.empty() ? std::string("b") : std::string(hint);
  Term candidate = Term::blank(base);
  while (ids_.count(candidate)) {
    candidate = Term::blank(base + "_" + std::to_string(++blankCounter_));
  }
  encodeLocked(candidate);
  return candidate;
}

bool Graph::indexesCoherent() const {
  std::shared_lock lock(mutex_);
  if (spo_.size() != pos_.size() || spo_.size() != osp_.size()) return false;
  for (const auto& k : spo_) {
    if (!pos_.count({k[1], k[2], k[0]}) || !osp_.count({k[2], k[0], k[1]})) return false;
  }
  return true;
}

bool sameTriples(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  auto ta = a.all();
  auto tb = b.all();
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  return ta == tb;
}

}  // namespace onokg::kg
