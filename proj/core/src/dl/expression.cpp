#include "onokg/dl/expression.h"

#include <algorithm>
#include <cctype>

#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"

namespace onokg::dl {

using kg::Term;

ExprPtr ClassExpression::atomic(Term name) {
  auto e = std::make_shared<ClassExpression>();
  e->kind = ExprKind::Atomic;
  e->name = std::move(name);
  return e;
}

ExprPtr ClassExpression::conj(std::vector<ExprPtr> ops) {
  if (ops.size() == 1) return ops.front();
  auto e = std::make_shared<ClassExpression>();
  e->kind = ExprKind::And;
  e->operands = std::move(ops);
  return e;
}

ExprPtr ClassExpression::disj(std::vector<ExprPtr> ops) {
  if (ops.size() == 1) return ops.front();
  auto e = std::make_shared<ClassExpression>();
  e->kind = ExprKind::Or;
  e->operands = std::move(ops);
  return e;
}

ExprPtr ClassExpression::some(Role r, ExprPtr filler) {
  auto e = std::make_shared<ClassExpression>();
  e->kind = ExprKind::Some;
  e->role = std::move(r);
  e->filler = std::move(filler);
  return e;
}

ExprPtr ClassExpression::only(Role r, ExprPtr filler) {
  auto e = std::make_shared<ClassExpression>();
  e->kind = ExprKind::Only;
  e->role = std::move(r);
  e->filler = std::move(filler);
  return e;
}

ExprPtr ClassExpression::min(Role r, std::uint64_t n) {
  auto e = std::make_shared<ClassExpression>();
  e->kind = ExprKind::MinCard;
  e->role = std::move(r);
  e->count = n;
  return e;
}

ExprPtr ClassExpression::max(Role r, std::uint64_t n) {
  auto e = std::make_shared<ClassExpression>();
  e->kind = ExprKind::MaxCard;
  e->role = std::move(r);
  e->count = n;
  return e;
}

std::string ClassExpression::toString() const {
  auto roleText = [&] {
    return (role.inverse ? "inverse " : "") + std::string(kg::localName(role.property.lexical()));
  };
  switch (kind) {
    case ExprKind::Atomic: return std::string(kg::localName(name.lexical()));
    case ExprKind::And:
    case ExprKind::Or: {
      std::string out = "(";
      for (std::size_t i = 0; i < operands.size(); ++i) {
        if (i) out += kind == ExprKind::And ? " and " : " or ";
        out += operands[i]->toString();
      }
      return out + ")";
    }
    case ExprKind::Some: return "(" + roleText() + " some " + filler->toString() + ")";
    case ExprKind::Only: return "(" + roleText() + " only " + filler->toString() + ")";
    case ExprKind::MinCard: return "(" + roleText() + " min " + std::to_string(count) + ")";
    case ExprKind::MaxCard: return "(" + roleText() + " max " + std::to_string(count) + ")";
  }
  return "";
}

bool structurallyEqual(const ClassExpression& a, const ClassExpression& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Atomic: return a.name == b.name;
    case ExprKind::And:
    case ExprKind::Or:
      if (a.operands.size() != b.operands.size()) return false;
      for (std::size_t i = 0; i < a.operands.size(); ++i) {
        if (!structurallyEqual(*a.operands[i], *b.operands[i])) return false;
      }
      return true;
    case ExprKind::Some:
    case ExprKind::Only: return a.role == b.role && structurallyEqual(*a.filler, *b.filler);
    case ExprKind::MinCard:
    case ExprKind::MaxCard: return a.role == b.role && a.count == b.count;
  }
  return false;
}

namespace {

enum class Tok { LParen, RParen, Word, Iri, Number, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t col = i + 1;
    if (c == '(' || c == ')') {
      out.push_back({c == '(' ? Tok::LParen : Tok::RParen, std::string(1, s[i]), col});
      ++i;
    } else if (c == '<') {
      auto close = s.find('>', i);
      if (close == std::string_view::npos) throw SyntaxError(1, col, "unterminated IRI");
      out.push_back({Tok::Iri, std::string(s.substr(i + 1, close - i - 1)), col});
      i = close + 1;
    } else if (std::isdigit(c) || ((c == '-' || c == '+') && i + 1 < s.size() &&
                                   std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i + 1;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(c) || c == '_' || c >= 0x80) {
      std::size_t j = i + 1;
      while (j < s.size()) {
        auto d = static_cast<unsigned char>(s[j]);
        if (std::isalnum(d) || d == '_' || d == '-' || d == ':' || d == '.' || d >= 0x80) {
          ++j;
        } else {
          break;
        }
      }
      out.push_back({Tok::Word, std::string(s.substr(i, j - i)), col});
      i = j;
    } else {
      throw SyntaxError(1, col, std::string("unexpected character '") + s[i] + "'");
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

bool isKeyword(const Token& t, std::string_view kw) {
  return t.kind == Tok::Word && text::toLower(t.text) == kw;
}

bool isAnyKeyword(const Token& t) {
  for (auto kw : {"and", "or", "some", "only", "min", "max", "inverse"}) {
    if (isKeyword(t, kw)) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const kg::Graph& g, const kg::PrefixTable& prefixes)
      : toks_(std::move(toks)), graph_(g), prefixes_(prefixes) {}

  ExprPtr parse() {
    if (peek().kind == Tok::End) throw SyntaxError(1, 1, "empty expression");
    auto e = parseOr();
    if (peek().kind != Tok::End) {
      throw SyntaxError(1, peek().column, "unexpected '" + peek().text + "'; expected 'and', 'or' or end of input");
    }
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  ExprPtr parseOr() {
    std::vector<ExprPtr> ops{parseAnd()};
    while (isKeyword(peek(), "or")) {
      next();
      ops.push_back(parseAnd());
    }
    return ClassExpression::disj(std::move(ops));
  }

  ExprPtr parseAnd() {
    std::vector<ExprPtr> ops{parseUnary()};
    while (isKeyword(peek(), "and")) {
      next();
      ops.push_back(parseUnary());
    }
    return ClassExpression::conj(std::move(ops));
  }

  bool restrictionAhead() const {
    std::size_t k = isKeyword(peek(), "inverse") ? 1 : 0;
    const Token& name = peek(k);
    if (name.kind != Tok::Word && name.kind != Tok::Iri) return false;
    const Token& kw = peek(k + 1);
    return isKeyword(kw, "some") || isKeyword(kw, "only") || isKeyword(kw, "min") || isKeyword(kw, "max");
  }

  ExprPtr parseUnary() {
    if (peek().kind == Tok::LParen) {
      next();
      auto e = parseOr();
      expectClose();
      return e;
    }
    if (restrictionAhead()) return parseRestriction();
    return parseName();
  }

  ExprPtr parsePrimary() {
    if (peek().kind == Tok::LParen) {
      next();
      auto e = parseOr();
      expectClose();
      return e;
    }
    return parseName();
  }

  void expectClose() {
    if (peek().kind != Tok::RParen) throw SyntaxError(1, peek().column, "expected ')'");
    next();
  }

  ExprPtr parseRestriction() {
    Role role;
    if (isKeyword(peek(), "inverse")) {
      next();
      role.inverse = true;
    }
    role.property = resolveProperty(next());
    const Token kw = next();
    const auto k = text::toLower(kw.text);
    if (k == "some") return ClassExpression::some(role, parsePrimary());
    if (k == "only") return ClassExpression::only(role, parsePrimary());
    const Token& n = peek();
    if (n.kind != Tok::Number) {
      throw CardinalityError(1, n.column, "'" + k + "' expects a nonnegative integer, found '" + n.text + "'");
    }
    next();
    std::uint64_t value = 0;
    bool digits = !n.text.empty() &&
                  std::all_of(n.text.begin(), n.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!digits) throw CardinalityError(1, n.column, "cardinality '" + n.text + "' is not a nonnegative integer");
    try {
      value = std::stoull(n.text);
    } catch (const std::exception&) {
      throw CardinalityError(1, n.column, "cardinality '" + n.text + "' is out of range");
    }
    return k == "min" ? ClassExpression::min(role, value) : ClassExpression::max(role, value);
  }

  ExprPtr parseName() {
    const Token& t = peek();
    if (t.kind == Tok::Number) throw SyntaxError(1, t.column, "unexpected number '" + t.text + "'");
    if (t.kind == Tok::End) throw SyntaxError(1, t.column, "unexpected end of input; expected a class name");
    if (t.kind == Tok::RParen) throw SyntaxError(1, t.column, "unexpected ')'; expected a class name");
    if (isAnyKeyword(t)) throw SyntaxError(1, t.column, "unexpected keyword '" + t.text + "'; expected a class name");
    next();
    return ClassExpression::atomic(resolve(t, "class", t.text));
  }

  Term toTerm(const Token& t, std::string_view local) const {
    if (t.kind == Tok::Iri) return Term::iri(t.text);
    if (local.find(':') != std::string_view::npos) return prefixes_.expand(local);
    return Term::iri(std::string(vocab::kOno) + std::string(local));
  }

  Term resolve(const Token& t, const char* kind, std::string_view local) const {
    Term term;
    try {
      term = toTerm(t, local);
    } catch (const ValidationError&) {
      throw UnknownNameError(kind, t.text);
    }
    if (!graph_.lookup(term)) throw UnknownNameError(kind, t.text);
    return term;
  }

  Term resolveProperty(const Token& t) const {
    if (t.kind != Tok::Word && t.kind != Tok::Iri) {
      throw SyntaxError(1, t.column, "expected a property name");
    }
    std::string local = t.text;
    if (t.kind == Tok::Word && local.size() > 4 && local.compare(0, 4, "have") == 0 &&
        std::isupper(static_cast<unsigned char>(local[4]))) {
      local = "has" + local.substr(4);
    }
    return resolve(t, "property", local);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const kg::Graph& graph_;
  const kg::PrefixTable& prefixes_;
};

}  // namespace

ExprPtr parseDlx(std::string_view text, const kg::Graph& graph, const kg::PrefixTable& prefixes) {
  return Parser(lex(text), graph, prefixes).parse();
}

}  // namespace onokg::dl
