#pragma once

#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "onokg/common/error.h"
#include "onokg/kg/prefixes.h"
#include "onokg/kg/term.h"

namespace onokg::sparql {

enum class QueryErrorKind { Syntax, UnknownPrefix, UnboundVariable, MalformedFilter, Unsupported };

std::string_view toString(QueryErrorKind k);

// Parse-time diagnostic. what() reads "line L, column C: <kind>: <detail>".
class QueryError : public SyntaxError {
 public:
  QueryError(QueryErrorKind kind, std::size_t line, std::size_t column, const std::string& detail)
      : SyntaxError(line, column, std::string(toString(kind)) + ": " + detail), kind_(kind) {}
  QueryErrorKind kind() const { return kind_; }

 private:
  QueryErrorKind kind_;
};

// A variable or a constant term in a triple pattern.
struct PatternTerm {
  std::optional<std::string> var;  // set for variables (name without '?')
  kg::Term term;                   // constant otherwise

  static PatternTerm variable(std::string name) { return {std::move(name), {}}; }
  static PatternTerm constant(kg::Term t) { return {std::nullopt, std::move(t)}; }
  bool isVar() const { return var.has_value(); }
};

struct TriplePattern {
  PatternTerm subject, predicate, object;
};

enum class FilterOp { Or, And, Not, Eq, Ne, Lt, Le, Gt, Ge, Regex, Var, Const };

struct FilterExpr {
  FilterOp op = FilterOp::Const;
  std::vector<FilterExpr> args;  // operands; Regex: [text]
  std::string var;               // Var
  kg::Term constant;             // Const
  std::string pattern;           // Regex
  std::string flags;             // Regex
  std::shared_ptr<const std::regex> compiled;  // Regex
};

struct ValuesClause {
  std::vector<std::string> vars;
  std::vector<std::vector<std::optional<kg::Term>>> rows;  // nullopt = UNDEF
};

struct SelectQuery;

struct GroupPattern {
  std::vector<TriplePattern> triples;
  std::vector<ValuesClause> values;
  std::vector<FilterExpr> filters;
  std::vector<std::shared_ptr<const SelectQuery>> subqueries;
};

struct SelectQuery {
  kg::PrefixTable prefixes;
  bool distinct = false;
  bool star = false;
  std::vector<std::string> projection;  // resolved; SELECT * lists in-scope vars
  GroupPattern where;
  std::vector<std::string> groupBy;

  // Variables bound by the pattern, VALUES, or subquery projections, in
  // first-occurrence order.
  std::vector<std::string> inScopeVariables() const;
};

// Parses the supported subset: PREFIX declarations, SELECT [DISTINCT]
// vars|*, WHERE { triples with ';' ',' and 'a', VALUES, FILTER, one level of
// nested SELECT }, GROUP BY vars. No prefixes are predeclared.
SelectQuery parseSelect(std::string_view text);

}  // namespace onokg::sparql
