#include "onokg/sparql/evaluator.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <unordered_map>

#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"

namespace onokg::sparql {

using kg::Term;
using kg::TermId;

namespace {

using Row = std::vector<std::uint64_t>;  // slot -> id, 0 = unbound

// Ids for constants absent from the graph live above the dictionary range so
// they never match a stored triple but still join and compare by value.
class TermContext {
 public:
  explicit TermContext(const kg::Graph& g) : graph_(g), base_(g.dictionarySize()) {}

  std::uint64_t idOf(const Term& t) {
    if (auto id = graph_.lookup(t)) return id->value;
    auto it = local_.find(t);
    if (it != local_.end()) return it->second;
    std::uint64_t id = base_ + localTerms_.size() + 1;
    local_.emplace(t, id);
    localTerms_.push_back(t);
    return id;
  }

  std::optional<std::uint64_t> graphId(const Term& t) const {
    auto id = graph_.lookup(t);
    if (!id) return std::nullopt;
    return id->value;
  }

  Term decode(std::uint64_t id) const {
    if (id <= base_) return graph_.decode(TermId{id});
    return localTerms_[id - base_ - 1];
  }

  const kg::Graph& graph() const { return graph_; }

 private:
  const kg::Graph& graph_;
  std::uint64_t base_;
  std::unordered_map<Term, std::uint64_t, kg::TermHash> local_;
  std::vector<Term> localTerms_;
};

struct IdTable {
  std::vector<std::string> vars;
  std::vector<Row> rows;
};

class Slots {
 public:
  std::size_t of(const std::string& v) {
    auto it = index_.find(v);
    if (it != index_.end()) return it->second;
    index_.emplace(v, names_.size());
    names_.push_back(v);
    return names_.size() - 1;
  }
  std::optional<std::size_t> find(const std::string& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return names_.size(); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::string> names_;
};

// Joins `right` (columns given as slots) into every compatible left row.
std::vector<Row> joinTable(const std::vector<Row>& left, const std::vector<std::size_t>& cols,
                           const std::vector<Row>& right) {
  std::vector<Row> out;
  for (const Row& l : left) {
    for (const Row& r : right) {
      Row merged = l;
      bool ok = true;
      for (std::size_t c = 0; c < cols.size() && ok; ++c) {
        const std::uint64_t v = r[c];
        if (v == 0) continue;
        std::uint64_t& slot = merged[cols[c]];
        if (slot == 0) {
          slot = v;
        } else if (slot != v) {
          ok = false;
        }
      }
      if (ok) out.push_back(std::move(merged));
    }
  }
  return out;
}

// Filter operand value: a term, or the error state.
using Value = std::optional<Term>;

Truth ebv(const Value& v) {
  if (!v || !v->isLiteral()) return Truth::Error;
  if (v->datatype() == vocab::kXsdBoolean) {
    if (v->lexical() == "true" || v->lexical() == "1") return Truth::True;
    if (v->lexical() == "false" || v->lexical() == "0") return Truth::False;
    return Truth::Error;
  }
  if (auto n = v->numericValue()) return *n != 0 ? Truth::True : Truth::False;
  if (!v->datatype() || *v->datatype() == vocab::kXsdString || v->language()) {
    return v->lexical().empty() ? Truth::False : Truth::True;
  }
  return Truth::Error;
}

bool stringLike(const Term& t) {
  return t.isLiteral() && (!t.datatype() || *t.datatype() == vocab::kXsdString);
}

class FilterEval {
 public:
  FilterEval(const TermContext& ctx, const Slots& slots) : ctx_(ctx), slots_(slots) {}

  Truth truth(const FilterExpr& e, const Row& row) const {
    switch (e.op) {
      case FilterOp::Or: {
        Truth a = truth(e.args[0], row), b = truth(e.args[1], row);
        if (a == Truth::True || b == Truth::True) return Truth::True;
        if (a == Truth::Error || b == Truth::Error) return Truth::Error;
        return Truth::False;
      }
      case FilterOp::And: {
        Truth a = truth(e.args[0], row), b = truth(e.args[1], row);
        if (a == Truth::False || b == Truth::False) return Truth::False;
        if (a == Truth::Error || b == Truth::Error) return Truth::Error;
        return Truth::True;
      }
      case FilterOp::Not: {
        Truth a = truth(e.args[0], row);
        if (a == Truth::Error) return a;
        return a == Truth::True ? Truth::False : Truth::True;
      }
      case FilterOp::Regex: {
        Value v = value(e.args[0], row);
        if (!v || !v->isLiteral()) return Truth::Error;
        return std::regex_search(v->lexical(), *e.compiled) ? Truth::True : Truth::False;
      }
      case FilterOp::Eq:
      case FilterOp::Ne:
      case FilterOp::Lt:
      case FilterOp::Le:
      case FilterOp::Gt:
      case FilterOp::Ge: return compare(e, row);
      case FilterOp::Var:
      case FilterOp::Const: return ebv(value(e, row));
    }
    return Truth::Error;
  }

 private:
  Value value(const FilterExpr& e, const Row& row) const {
    if (e.op == FilterOp::Const) return e.constant;
    if (e.op == FilterOp::Var) {
      auto slot = slots_.find(e.var);
      if (!slot || row[*slot] == 0) return std::nullopt;
      return ctx_.decode(row[*slot]);
    }
    Truth t = truth(e, row);
    if (t == Truth::Error) return std::nullopt;
    return Term::typedLiteral(t == Truth::True ? "true" : "false", vocab::kXsdBoolean);
  }

  Truth compare(const FilterExpr& e, const Row& row) const {
    Value a = value(e.args[0], row), b = value(e.args[1], row);
    if (!a || !b) return Truth::Error;
    int cmp = 0;
    auto na = a->numericValue(), nb = b->numericValue();
    if (na && nb) {
      cmp = *na < *nb ? -1 : (*na > *nb ? 1 : 0);
    } else if (stringLike(*a) && stringLike(*b)) {
      cmp = a->lexical().compare(b->lexical());
      cmp = cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
    } else if (e.op == FilterOp::Eq || e.op == FilterOp::Ne) {
      bool same = *a == *b;
      return (same == (e.op == FilterOp::Eq)) ? Truth::True : Truth::False;
    } else {
      return Truth::Error;
    }
    bool r = false;
    switch (e.op) {
      case FilterOp::Eq: r = cmp == 0; break;
      case FilterOp::Ne: r = cmp != 0; break;
      case FilterOp::Lt: r = cmp < 0; break;
      case FilterOp::Le: r = cmp <= 0; break;
      case FilterOp::Gt: r = cmp > 0; break;
      case FilterOp::Ge: r = cmp >= 0; break;
      default: break;
    }
    return r ? Truth::True : Truth::False;
  }

  const TermContext& ctx_;
  const Slots& slots_;
};

void collectFilterVars(const FilterExpr& e, Slots& slots) {
  if (e.op == FilterOp::Var) slots.of(e.var);
  for (const auto& a : e.args) collectFilterVars(a, slots);
}

// Extends every row through one triple pattern.
std::vector<Row> extend(const std::vector<Row>& rows, const TriplePattern& tp, Slots& slots, TermContext& ctx) {
  struct Pos {
    std::optional<std::size_t> slot;
    std::optional<std::uint64_t> constant;  // nullopt id + no slot = absent term
    bool absent = false;
  };
  auto resolve = [&](const PatternTerm& pt) {
    Pos p;
    if (pt.isVar()) {
      p.slot = slots.of(*pt.var);
    } else if (auto id = ctx.graphId(pt.term)) {
      p.constant = *id;
    } else {
      p.absent = true;
    }
    return p;
  };
  const Pos ps[3] = {resolve(tp.subject), resolve(tp.predicate), resolve(tp.object)};
  std::vector<Row> out;
  if (ps[0].absent || ps[1].absent || ps[2].absent) return out;
  const auto& g = ctx.graph();
  for (const Row& row : rows) {
    std::optional<TermId> bound[3];
    for (int i = 0; i < 3; ++i) {
      if (ps[i].constant) {
        bound[i] = TermId{*ps[i].constant};
      } else if (row[*ps[i].slot] != 0) {
        bound[i] = TermId{row[*ps[i].slot]};
      }
    }
    for (const auto& m : g.matchIds(bound[0], bound[1], bound[2])) {
      const std::uint64_t vals[3] = {m.s.value, m.p.value, m.o.value};
      Row r = row;
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i) {
        if (!ps[i].slot) continue;
        std::uint64_t& slot = r[*ps[i].slot];
        if (slot == 0) {
          slot = vals[i];
        } else if (slot != vals[i]) {
          ok = false;  // repeated variable within the pattern
        }
      }
      if (ok) out.push_back(std::move(r));
    }
  }
  return out;
}

IdTable evalQuery(const SelectQuery& q, TermContext& ctx) {
  Slots slots;
  for (const auto& v : q.inScopeVariables()) slots.of(v);
  for (const auto& f : q.where.filters) collectFilterVars(f, slots);
  for (const auto& v : q.projection) slots.of(v);
  const std::size_t width = slots.size();

  std::vector<Row> rows{Row(width, 0)};

  for (const auto& sq : q.where.subqueries) {
    IdTable inner = evalQuery(*sq, ctx);
    std::vector<std::size_t> cols;
    for (const auto& v : inner.vars) cols.push_back(*slots.find(v));
    rows = joinTable(rows, cols, inner.rows);
  }

  for (const auto& vc : q.where.values) {
    std::vector<std::size_t> cols;
    for (const auto& v : vc.vars) cols.push_back(*slots.find(v));
    std::vector<Row> table;
    for (const auto& vr : vc.rows) {
      Row r;
      for (const auto& cell : vr) r.push_back(cell ? ctx.idOf(*cell) : 0);
      table.push_back(std::move(r));
    }
    rows = joinTable(rows, cols, table);
  }

  // Greedy order: the pattern with the most bound positions goes next.
  std::vector<bool> boundVar(width, false);
  for (const Row& r : rows) {
    for (std::size_t i = 0; i < width; ++i) boundVar[i] = boundVar[i] || r[i] != 0;
  }
  std::vector<const TriplePattern*> pending;
  for (const auto& tp : q.where.triples) pending.push_back(&tp);
  while (!pending.empty() && !rows.empty()) {
    auto score = [&](const TriplePattern* tp) {
      int s = 0;
      for (const auto* pt : {&tp->subject, &tp->predicate, &tp->object}) {
        if (!pt->isVar() || boundVar[*slots.find(*pt->var)]) ++s;
      }
      return s;
    };
    auto best = std::max_element(pending.begin(), pending.end(),
                                 [&](auto* a, auto* b) { return score(a) < score(b); });
    const TriplePattern* tp = *best;
    pending.erase(best);
    rows = extend(rows, *tp, slots, ctx);
    for (const auto* pt : {&tp->subject, &tp->predicate, &tp->object}) {
      if (pt->isVar()) boundVar[*slots.find(*pt->var)] = true;
    }
  }
  if (!pending.empty()) rows.clear();

  if (!q.where.filters.empty()) {
    FilterEval fe(ctx, slots);
    std::vector<Row> kept;
    for (auto& r : rows) {
      bool pass = std::all_of(q.where.filters.begin(), q.where.filters.end(),
                              [&](const FilterExpr& f) { return fe.truth(f, r) == Truth::True; });
      if (pass) kept.push_back(std::move(r));
    }
    rows = std::move(kept);
  }

  IdTable out;
  out.vars = q.projection;
  std::vector<std::size_t> proj;
  for (const auto& v : q.projection) proj.push_back(*slots.find(v));
  for (const Row& r : rows) {
    Row p;
    for (std::size_t s : proj) p.push_back(r[s]);
    out.rows.push_back(std::move(p));
  }
  std::sort(out.rows.begin(), out.rows.end());
  // Each group collapses to its key; projection is restricted to keys.
  if (q.distinct || !q.groupBy.empty()) {
    out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  }
  return out;
}

std::string cellText(const Term& t) { return t.lexical(); }

}  // namespace

SolutionTable evaluate(const kg::Graph& g, const SelectQuery& q) {
  TermContext ctx(g);
  IdTable ids = evalQuery(q, ctx);
  SolutionTable out;
  out.header = ids.vars;
  out.rows.reserve(ids.rows.size());
  for (const Row& r : ids.rows) {
    std::vector<std::optional<Term>> row;
    for (auto id : r) {
      if (id == 0) {
        row.emplace_back(std::nullopt);
      } else {
        row.emplace_back(ctx.decode(id));
      }
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string SolutionTable::toCsv() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += text::csvEscape(header[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) out += text::csvEscape(cellText(*row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string SolutionTable::toJson() const {
  nlohmann::json j;
  j["header"] = header;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& cell : row) {
      if (cell) {
        r.push_back(cellText(*cell));
      } else {
        r.push_back(nullptr);
      }
    }
    j["rows"].push_back(std::move(r));
  }
  return j.dump();
}

std::string SolutionTable::toText(const kg::PrefixTable& prefixes) const {
  std::vector<std::vector<std::string>> cells;
  cells.emplace_back();
  for (const auto& h : header) cells.back().push_back("?" + h);
  for (const auto& row : rows) {
    cells.emplace_back();
    for (const auto& cell : row) {
      if (!cell) {
        cells.back().push_back("");
      } else if (cell->isIri()) {
        cells.back().push_back(prefixes.compact(cell->lexical()));
      } else {
        cells.back().push_back(cell->isBlank() ? "_:" + cell->lexical() : cell->lexical());
      }
    }
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& r : cells) {
    for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += " | ";
      out += r[i];
      if (i + 1 < r.size()) out.append(widths[i] - r[i].size(), ' ');
    }
    out += '\n';
  };
  line(cells[0]);
  std::size_t total = 0;
  for (std::size_t i = 0; i < widths.size(); ++i) total += widths[i] + (i ? 3 : 0);
  out.append(total, '-');
  out += '\n';
  for (std::size_t i = 1; i < cells.size(); ++i) line(cells[i]);
  out += "(" + std::to_string(rows.size()) + (rows.size() == 1 ? " row)\n" : " rows)\n");
  return out;
}

std::vector<PackResult> runQueryPack(const kg::Graph& g, const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw IoError(dir, "query pack directory not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".rq") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<PackResult> out;
  for (const auto& f : files) {
    PackResult r;
    r.id = f.stem().string();
    r.path = f.string();
    auto query = parseSelect(text::readFile(r.path));
    auto t0 = std::chrono::steady_clock::now();
    r.table = evaluate(g, query);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace onokg::sparql
