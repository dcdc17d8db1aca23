#include <algorithm>
#include <cctype>
#include <set>

#include "onokg/common/text.h"
#include "onokg/kg/vocab.h"
#include "onokg/sparql/query.h"

namespace onokg::sparql {

using kg::Term;

std::string_view toString(QueryErrorKind k) {
  switch (k) {
    case QueryErrorKind::Syntax: return "syntax error";
    case QueryErrorKind::UnknownPrefix: return "unknown prefix";
    case QueryErrorKind::UnboundVariable: return "unbound variable";
    case QueryErrorKind::MalformedFilter: return "malformed FILTER";
    case QueryErrorKind::Unsupported: return "unsupported construct";
  }
  return "error";
}

namespace {

enum class T { IriRef, PName, Var, String, Number, LangTag, Caret2, Punct, Op, Word, End };

struct Tok {
  T kind;
  std::string text;
  std::size_t line, col;
};

bool pnChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
         static_cast<unsigned char>(c) >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Tok> run() {
    std::vector<Tok> out;
    while (true) {
      skip();
      if (i_ >= s_.size()) {
        out.push_back({T::End, "", line_, col()});
        return out;
      }
      out.push_back(one());
    }
  }

 private:
  std::size_t col() const { return i_ - lineStart_ + 1; }

  void skip() {
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '\n') {
        ++line_;
        lineStart_ = ++i_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++i_;
      } else if (c == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw QueryError(QueryErrorKind::Syntax, line_, col(), what);
  }

  Tok one() {
    const std::size_t line = line_, c0 = col();
    const char c = s_[i_];
    auto make = [&](T k, std::string text) { return Tok{k, std::move(text), line, c0}; };
    if (c == '<') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && s_[j] != '>' && !std::isspace(static_cast<unsigned char>(s_[j])) &&
             s_[j] != '<' && s_[j] != '"') {
        ++j;
      }
      if (j < s_.size() && s_[j] == '>' && j > i_ + 1) {
        std::string iri(s_.substr(i_ + 1, j - i_ - 1));
        i_ = j + 1;
        return make(T::IriRef, iri);
      }
      if (i_ + 1 < s_.size() && s_[i_ + 1] == '=') {
        i_ += 2;
        return make(T::Op, "<=");
      }
      ++i_;
      return make(T::Op, "<");
    }
    if (c == '>') {
      if (i_ + 1 < s_.size() && s_[i_ + 1] == '=') {
        i_ += 2;
        return make(T::Op, ">=");
      }
      ++i_;
      return make(T::Op, ">");
    }
    if (c == '!' && i_ + 1 < s_.size() && s_[i_ + 1] == '=') {
      i_ += 2;
      return make(T::Op, "!=");
    }
    if (c == '!' || c == '=') {
      ++i_;
      return make(T::Op, std::string(1, c));
    }
    if ((c == '&' || c == '|') && i_ + 1 < s_.size() && s_[i_ + 1] == c) {
      i_ += 2;
      return make(T::Op, std::string(2, c));
    }
    if (c == '^' && i_ + 1 < s_.size() && s_[i_ + 1] == '^') {
      i_ += 2;
      return make(T::Caret2, "^^");
    }
    if (std::string_view("{}().;,[]*").find(c) != std::string_view::npos) {
      ++i_;
      return make(T::Punct, std::string(1, c));
    }
    if (c == '?' || c == '$') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      if (j == i_ + 1) fail("empty variable name");
      std::string name(s_.substr(i_ + 1, j - i_ - 1));
      i_ = j;
      return make(T::Var, name);
    }
    if (c == '"') return string(line, c0);
    if (c == '@') {
      std::size_t j = i_ + 1;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '-')) ++j;
      if (j == i_ + 1) fail("empty language tag");
      std::string tag(s_.substr(i_ + 1, j - i_ - 1));
      i_ = j;
      return make(T::LangTag, tag);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        ((c == '-' || c == '+') && i_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
      std::size_t j = i_ + 1;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j + 1 < s_.size() && s_[j] == '.' && std::isdigit(static_cast<unsigned char>(s_[j + 1]))) {
        ++j;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      }
      std::string num(s_.substr(i_, j - i_));
      i_ = j;
      return make(T::Number, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '-')) ++j;
      if (j < s_.size() && s_[j] == ':') {
        std::size_t k = j + 1;
        while (k < s_.size() && pnChar(s_[k])) ++k;
        while (k > j + 1 && s_[k - 1] == '.') --k;  // statement terminator
        std::string pname(s_.substr(i_, k - i_));
        i_ = k;
        return make(T::PName, pname);
      }
      std::string word(s_.substr(i_, j - i_));
      i_ = j;
      return make(T::Word, word);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Tok string(std::size_t line, std::size_t c0) {
    ++i_;
    std::string out;
    while (i_ < s_.size()) {
      char c = s_[i_++];
      if (c == '"') return {T::String, out, line, c0};
      if (c == '\n') break;
      if (c == '\\' && i_ < s_.size()) {
        char e = s_[i_++];
        switch (e) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
        continue;
      }
      out.push_back(c);
    }
    throw QueryError(QueryErrorKind::Syntax, line, c0, "unterminated string literal");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t lineStart_ = 0;
};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Tok> toks) : toks_(std::move(toks)) {}

  SelectQuery parseQuery() {
    SelectQuery q;
    while (isWord("PREFIX")) {
      next();
      const Tok& p = expect(T::PName, "a prefix declaration 'name:'");
      auto colon = p.text.find(':');
      if (colon + 1 != p.text.size()) fail(p, "prefix declaration must end with ':'");
      const Tok& iri = expect(T::IriRef, "a namespace IRI in angle brackets");
      prefixes_.add(p.text.substr(0, colon), iri.text);
    }
    q = parseSelect(0);
    if (peek().kind != T::End) fail(peek(), "unexpected '" + peek().text + "' after the query; expected end of input");
    return q;
  }

 private:
  const Tok& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Tok& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  bool isWord(std::string_view kw, std::size_t k = 0) const {
    return peek(k).kind == T::Word && upper(peek(k).text) == upper(kw);
  }
  bool isPunct(char c, std::size_t k = 0) const {
    return peek(k).kind == T::Punct && peek(k).text[0] == c;
  }
  bool isOp(std::string_view op) const { return peek().kind == T::Op && peek().text == op; }

  [[noreturn]] void fail(const Tok& t, const std::string& what,
                         QueryErrorKind kind = QueryErrorKind::Syntax) const {
    throw QueryError(kind, t.line, t.col, what);
  }

  const Tok& expect(T kind, const std::string& what) {
    if (peek().kind != kind) {
      fail(peek(), "expected " + what + ", found " + (peek().kind == T::End ? "end of input" : "'" + peek().text + "'"));
    }
    return next();
  }

  void expectPunct(char c) {
    if (!isPunct(c)) {
      fail(peek(), std::string("expected '") + c + "', found " +
                       (peek().kind == T::End ? "end of input" : "'" + peek().text + "'"));
    }
    next();
  }

  void expectWord(std::string_view kw) {
    if (!isWord(kw)) fail(peek(), "expected '" + std::string(kw) + "'");
    next();
  }

  SelectQuery parseSelect(int depth) {
    SelectQuery q;
    const Tok selectTok = peek();
    expectWord("SELECT");
    if (isWord("DISTINCT")) {
      next();
      q.distinct = true;
    }
    std::vector<const Tok*> projTokens;
    if (isPunct('*')) {
      next();
      q.star = true;
    } else {
      while (peek().kind == T::Var) projTokens.push_back(&next());
      if (projTokens.empty()) fail(peek(), "expected '*' or at least one projected variable");
    }
    if (isWord("WHERE")) next();
    q.where = parseGroup(depth);
    if (isWord("GROUP")) {
      next();
      expectWord("BY");
      if (peek().kind != T::Var) fail(peek(), "expected a variable after GROUP BY");
      std::vector<const Tok*> groupTokens;
      while (peek().kind == T::Var) groupTokens.push_back(&next());
      auto scope = q.inScopeVariables();
      for (const Tok* t : groupTokens) {
        if (std::find(scope.begin(), scope.end(), t->text) == scope.end()) {
          fail(*t, "GROUP BY variable ?" + t->text + " does not occur in the pattern", QueryErrorKind::UnboundVariable);
        }
        q.groupBy.push_back(t->text);
      }
    }
    q.prefixes = prefixes_;
    auto scope = q.inScopeVariables();
    if (q.star) {
      q.projection = q.groupBy.empty() ? scope : q.groupBy;
    } else {
      for (const Tok* t : projTokens) {
        if (std::find(scope.begin(), scope.end(), t->text) == scope.end()) {
          fail(*t, "projected variable ?" + t->text + " does not occur in the pattern or VALUES",
               QueryErrorKind::UnboundVariable);
        }
        if (!q.groupBy.empty() && std::find(q.groupBy.begin(), q.groupBy.end(), t->text) == q.groupBy.end()) {
          fail(*t, "projected variable ?" + t->text + " is not a GROUP BY key", QueryErrorKind::UnboundVariable);
        }
        q.projection.push_back(t->text);
      }
    }
    (void)selectTok;
    return q;
  }

  GroupPattern parseGroup(int depth) {
    GroupPattern g;
    expectPunct('{');
    while (!isPunct('}')) {
      if (peek().kind == T::End) fail(peek(), "expected '}' before end of input");
      if (isPunct('.')) {
        next();
      } else if (isWord("FILTER")) {
        next();
        g.filters.push_back(parseFilterBody());
      } else if (isWord("VALUES")) {
        next();
        g.values.push_back(parseValues());
      } else if (isWord("SELECT") || (isPunct('{') && isWord("SELECT", 1))) {
        if (depth >= 1) fail(peek(), "subqueries nest at most one level", QueryErrorKind::Unsupported);
        bool braced = isPunct('{');
        if (braced) next();
        g.subqueries.push_back(std::make_shared<SelectQuery>(parseSelect(depth + 1)));
        if (braced) expectPunct('}');
      } else if (isPunct('{')) {
        fail(peek(), "nested group patterns are only supported around a subquery", QueryErrorKind::Unsupported);
      } else if (isWord("OPTIONAL") || isWord("UNION") || isWord("MINUS") || isWord("BIND")) {
        fail(peek(), "'" + peek().text + "' is not supported", QueryErrorKind::Unsupported);
      } else {
        parseTriples(g);
      }
    }
    next();
    return g;
  }

  void parseTriples(GroupPattern& g) {
    const Tok& st = peek();
    PatternTerm subject = parseTerm(false);
    if (!subject.isVar() && subject.term.isLiteral()) fail(st, "a literal cannot be a subject");
    while (true) {
      PatternTerm verb;
      if (peek().kind == T::Word && peek().text == "a") {
        next();
        verb = PatternTerm::constant(Term::iri(vocab::kRdfType));
      } else {
        const Tok& vt = peek();
        verb = parseTerm(false);
        if (!verb.isVar() && !verb.term.isIri()) fail(vt, "a predicate must be an IRI or a variable");
      }
      while (true) {
        g.triples.push_back({subject, verb, parseTerm(true)});
        if (!isPunct(',')) break;
        next();
      }
      if (!isPunct(';')) break;
      while (isPunct(';')) next();
      if (isPunct('.') || isPunct('}')) break;
    }
    if (isPunct('.')) {
      next();
    } else if (!isPunct('}') && !isWord("FILTER") && !isWord("VALUES") && !isWord("OPTIONAL") &&
               !isWord("UNION") && !isWord("MINUS") && !isWord("BIND")) {
      fail(peek(), "expected '.', ';', ',' or '}' after a triple pattern, found '" + peek().text + "'");
    }
  }

  Term expandPName(const Tok& t) const {
    auto colon = t.text.find(':');
    auto prefix = t.text.substr(0, colon);
    auto ns = prefixes_.namespaceOf(prefix);
    if (!ns) fail(t, "prefix '" + prefix + ":' is not declared", QueryErrorKind::UnknownPrefix);
    try {
      return Term::iri(*ns + t.text.substr(colon + 1));
    } catch (const ValidationError& e) {
      fail(t, e.what());
    }
  }

  Term iriOf(const Tok& t) const {
    try {
      return Term::iri(t.text);
    } catch (const ValidationError& e) {
      fail(t, e.what());
    }
  }

  std::optional<Term> constant(bool allowLiteral) {
    const Tok& t = peek();
    switch (t.kind) {
      case T::IriRef: next(); return iriOf(t);
      case T::PName: next(); return expandPName(t);
      case T::String: {
        if (!allowLiteral) fail(t, "a literal is not allowed here");
        next();
        if (peek().kind == T::LangTag) return Term::langLiteral(t.text, next().text);
        if (peek().kind == T::Caret2) {
          next();
          const Tok& dt = peek();
          if (dt.kind == T::IriRef) return Term::typedLiteral(t.text, next().text);
          if (dt.kind == T::PName) return Term::typedLiteral(t.text, expandPName(next()).lexical());
          fail(dt, "expected a datatype IRI after '^^'");
        }
        return Term::literal(t.text);
      }
      case T::Number: {
        if (!allowLiteral) fail(t, "a number is not allowed here");
        next();
        bool dec = t.text.find('.') != std::string::npos;
        return Term::typedLiteral(t.text, dec ? vocab::kXsdDecimal : vocab::kXsdInteger);
      }
      case T::Word:
        if (allowLiteral && (t.text == "true" || t.text == "false")) {
          next();
          return Term::typedLiteral(t.text, vocab::kXsdBoolean);
        }
        return std::nullopt;
      default: return std::nullopt;
    }
  }

  PatternTerm parseTerm(bool allowLiteral) {
    const Tok& t = peek();
    if (t.kind == T::Var) return PatternTerm::variable(next().text);
    if (isPunct('[')) fail(t, "blank node syntax is not supported", QueryErrorKind::Unsupported);
    if (auto c = constant(allowLiteral)) return PatternTerm::constant(*c);
    fail(t, "expected a variable, IRI, prefixed name or literal, found " +
                (t.kind == T::End ? std::string("end of input") : "'" + t.text + "'"));
  }

  ValuesClause parseValues() {
    ValuesClause v;
    bool multi = false;
    if (peek().kind == T::Var) {
      v.vars.push_back(next().text);
    } else {
      expectPunct('(');
      multi = true;
      while (peek().kind == T::Var) v.vars.push_back(next().text);
      expectPunct(')');
    }
    expectPunct('{');
    auto cell = [&]() -> std::optional<Term> {
      if (isWord("UNDEF")) {
        next();
        return std::nullopt;
      }
      const Tok& t = peek();
      auto c = constant(true);
      if (!c) fail(t, "expected a constant or UNDEF in VALUES");
      return c;
    };
    while (!isPunct('}')) {
      if (peek().kind == T::End) fail(peek(), "expected '}' to close VALUES");
      std::vector<std::optional<Term>> row;
      if (multi) {
        expectPunct('(');
        while (!isPunct(')')) {
          if (peek().kind == T::End) fail(peek(), "expected ')' in VALUES row");
          row.push_back(cell());
        }
        next();
        if (row.size() != v.vars.size()) fail(peek(), "VALUES row arity differs from its variable list");
      } else {
        row.push_back(cell());
      }
      v.rows.push_back(std::move(row));
    }
    next();
    return v;
  }

  // FILTER body: a bracketted expression or a bare regex call.
  FilterExpr parseFilterBody() {
    try {
      if (isWord("regex")) return parsePrimary();
      if (!isPunct('(')) fail(peek(), "expected '(' after FILTER");
      return parsePrimary();
    } catch (const QueryError& e) {
      if (e.kind() == QueryErrorKind::Syntax) {
        std::string d = e.detail();
        d = d.substr(d.find(": ") + 2);
        throw QueryError(QueryErrorKind::MalformedFilter, e.line(), e.column(), d);
      }
      throw;
    }
  }

  FilterExpr parseOr() {
    FilterExpr left = parseAnd();
    while (isOp("||")) {
      next();
      FilterExpr e;
      e.op = FilterOp::Or;
      e.args = {std::move(left), parseAnd()};
      left = std::move(e);
    }
    return left;
  }

  FilterExpr parseAnd() {
    FilterExpr left = parseUnary();
    while (isOp("&&")) {
      next();
      FilterExpr e;
      e.op = FilterOp::And;
      e.args = {std::move(left), parseUnary()};
      left = std::move(e);
    }
    return left;
  }

  FilterExpr parseUnary() {
    if (isOp("!")) {
      next();
      FilterExpr e;
      e.op = FilterOp::Not;
      e.args = {parseUnary()};
      return e;
    }
    FilterExpr left = parsePrimary();
    static const std::pair<const char*, FilterOp> ops[] = {
        {"=", FilterOp::Eq}, {"!=", FilterOp::Ne}, {"<", FilterOp::Lt},
        {"<=", FilterOp::Le}, {">", FilterOp::Gt}, {">=", FilterOp::Ge}};
    for (const auto& [text, op] : ops) {
      if (isOp(text)) {
        next();
        FilterExpr e;
        e.op = op;
        e.args = {std::move(left), parsePrimary()};
        return e;
      }
    }
    return left;
  }

  FilterExpr parsePrimary() {
    const Tok& t = peek();
    if (isPunct('(')) {
      next();
      FilterExpr e = parseOr();
      if (!isPunct(')')) fail(peek(), "expected ')' in FILTER expression", QueryErrorKind::MalformedFilter);
      next();
      return e;
    }
    if (isWord("regex")) {
      next();
      expectPunct('(');
      FilterExpr e;
      e.op = FilterOp::Regex;
      e.args = {parseOr()};
      expectPunct(',');
      const Tok& pat = expect(T::String, "a regex pattern string");
      e.pattern = pat.text;
      if (isPunct(',')) {
        next();
        e.flags = expect(T::String, "a regex flags string").text;
        if (e.flags.find_first_not_of("i") != std::string::npos) {
          fail(pat, "unsupported regex flags '" + e.flags + "'", QueryErrorKind::MalformedFilter);
        }
      }
      expectPunct(')');
      auto options = std::regex::ECMAScript;
      if (e.flags.find('i') != std::string::npos) options |= std::regex::icase;
      try {
        e.compiled = std::make_shared<const std::regex>(e.pattern, options);
      } catch (const std::regex_error&) {
        fail(pat, "invalid regular expression '" + e.pattern + "'", QueryErrorKind::MalformedFilter);
      }
      return e;
    }
    if (t.kind == T::Var) {
      FilterExpr e;
      e.op = FilterOp::Var;
      e.var = next().text;
      return e;
    }
    if (auto c = constant(true)) {
      FilterExpr e;
      e.op = FilterOp::Const;
      e.constant = *c;
      return e;
    }
    fail(t, "expected an operand in FILTER expression, found " +
                (t.kind == T::End ? std::string("end of input") : "'" + t.text + "'"),
         QueryErrorKind::MalformedFilter);
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  kg::PrefixTable prefixes_;
};

}  // namespace

std::vector<std::string> SelectQuery::inScopeVariables() const {
  std::vector<std::string> out;
  auto add = [&](const std::string& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& sq : where.subqueries) {
    for (const auto& v : sq->projection) add(v);
  }
  for (const auto& t : where.triples) {
    for (const auto* pt : {&t.subject, &t.predicate, &t.object}) {
      if (pt->isVar()) add(*pt->var);
    }
  }
  for (const auto& v : where.values) {
    for (const auto& name : v.vars) add(name);
  }
  return out;
}

SelectQuery parseSelect(std::string_view text) { return Parser(Lexer(text).run()).parseQuery(); }

}  // namespace onokg::sparql
