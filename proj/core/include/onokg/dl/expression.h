#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "onokg/common/error.h"
#include "onokg/kg/graph.h"
#include "onokg/kg/prefixes.h"

namespace onokg::dl {

enum class ExprKind { Atomic, And, Or, Some, Only, MinCard, MaxCard };

struct ClassExpression;
using ExprPtr = std::shared_ptr<const ClassExpression>;

struct Role {
  kg::Term property;
  bool inverse = false;
  friend bool operator==(const Role&, const Role&) = default;
};

// Immutable AST node. Operand lists of And/Or have at least two entries;
// Some/Only carry a filler, MinCard/MaxCard a count.
struct ClassExpression {
  ExprKind kind = ExprKind::Atomic;
  kg::Term name;                  // Atomic
  std::vector<ExprPtr> operands;  // And, Or
  Role role;                      // restrictions
  ExprPtr filler;                 // Some, Only
  std::uint64_t count = 0;        // MinCard, MaxCard

  static ExprPtr atomic(kg::Term name);
  static ExprPtr conj(std::vector<ExprPtr> ops);
  static ExprPtr disj(std::vector<ExprPtr> ops);
  static ExprPtr some(Role r, ExprPtr filler);
  static ExprPtr only(Role r, ExprPtr filler);
  static ExprPtr min(Role r, std::uint64_t n);
  static ExprPtr max(Role r, std::uint64_t n);

  // Fully parenthesized rendering with local names, e.g.
  // "(Biomarker and (causes some BRCA))".
  std::string toString() const;
};

bool structurallyEqual(const ClassExpression& a, const ClassExpression& b);

// Cardinality restriction with a missing, negative or non-integer count.
class CardinalityError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// Parses the DL query language:
//   expr  := conj ('or' conj)*
//   conj  := unary ('and' unary)*
//   unary := '(' expr ')' | role ('some'|'only') primary
//          | role ('min'|'max') INT | NAME
//   role  := ['inverse'] NAME
//   primary := NAME | '(' expr ')'
// Keywords are case-insensitive. Names are bare local names in the ono
// namespace, prefixed names, or <absolute-iri>; class names are matched
// exactly against the graph vocabulary. Property names spelled have<X>
// resolve to has<X>. Throws SyntaxError, CardinalityError, or
// UnknownNameError with kind "class" or "property".
ExprPtr parseDlx(std::string_view text, const kg::Graph& graph,
                 const kg::PrefixTable& prefixes = kg::PrefixTable::standard());

}  // namespace onokg::dl
