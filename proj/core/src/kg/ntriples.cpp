#include "onokg/kg/ntriples.h"

#include <cctype>
#include <map>
#include <optional>

#include "onokg/common/error.h"
#include "onokg/common/text.h"

namespace onokg::kg {

std::string_view toString(NTriplesErrorKind kind) {
  switch (kind) {
    case NTriplesErrorKind::UnterminatedLiteral: return "unterminated literal";
    case NTriplesErrorKind::RelativeIri: return "relative IRI";
    case NTriplesErrorKind::MissingTerminator: return "missing terminator";
    case NTriplesErrorKind::UnterminatedIri: return "unterminated IRI";
    case NTriplesErrorKind::InvalidEscape: return "invalid escape";
    case NTriplesErrorKind::InvalidBlankLabel: return "invalid blank node label";
    case NTriplesErrorKind::UnexpectedToken: return "unexpected token";
    case NTriplesErrorKind::InvalidTriple: return "invalid triple";
  }
  return "error";
}

namespace {

struct LineError {
  NTriplesErrorKind kind;
  std::string message;
};

// Single-line cursor. Every parse method either consumes a well-formed token
// or throws LineError.
class LineParser {
 public:
  LineParser(std::string_view line, Graph& graph, std::map<std::string, Term>& blanks)
      : line_(line), graph_(graph), blanks_(blanks) {}

  bool blankOrComment() {
    skipWs();
    return pos_ >= line_.size() || line_[pos_] == '#';
  }

  Triple parseTriple() {
    Term s = parseTerm("subject");
    Term p = parseTerm("predicate");
    Term o = parseTerm("object");
    skipWs();
    if (pos_ >= line_.size() || line_[pos_] != '.') {
      throw LineError{NTriplesErrorKind::MissingTerminator, "expected '.' after the object"};
    }
    ++pos_;
    skipWs();
    if (pos_ < line_.size() && line_[pos_] != '#') {
      throw LineError{NTriplesErrorKind::UnexpectedToken,
                      "trailing content after '.': '" + std::string(line_.substr(pos_)) + "'"};
    }
    if (s.isLiteral()) throw LineError{NTriplesErrorKind::InvalidTriple, "literal in subject position"};
    if (!p.isIri()) throw LineError{NTriplesErrorKind::InvalidTriple, "predicate must be an IRI"};
    return {std::move(s), std::move(p), std::move(o)};
  }

 private:
  void skipWs() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t' || line_[pos_] == '\r')) {
      ++pos_;
    }
  }

  Term parseTerm(const char* position) {
    skipWs();
    if (pos_ >= line_.size()) {
      throw LineError{NTriplesErrorKind::UnexpectedToken, std::string("missing ") + position};
    }
    char c = line_[pos_];
    if (c == '<') return Term::iri(parseIri());
    if (c == '_') return parseBlank();
    if (c == '"') return parseLiteral();
    throw LineError{NTriplesErrorKind::UnexpectedToken,
                    std::string("expected ") + position + ", found '" + std::string(1, c) + "'"};
  }

  std::string parseIri() {
    auto close = line_.find('>', pos_ + 1);
    if (close == std::string_view::npos) {
      throw LineError{NTriplesErrorKind::UnterminatedIri, "IRI is missing '>'"};
    }
    std::string iri(line_.substr(pos_ + 1, close - pos_ - 1));
    pos_ = close + 1;
    if (!isAbsoluteIri(iri)) {
      throw LineError{NTriplesErrorKind::RelativeIri, "IRI is not absolute: <" + iri + ">"};
    }
    return iri;
  }

  Term parseBlank() {
    if (line_.substr(pos_, 2) != "_:") {
      throw LineError{NTriplesErrorKind::UnexpectedToken, "expected '_:' blank node prefix"};
    }
    pos_ += 2;
    std::size_t start = pos_;
    while (pos_ < line_.size()) {
      auto u = static_cast<unsigned char>(line_[pos_]);
      if (std::isalnum(u) || u == '_' || u == '-' || u == '.' || u >= 0x80) {
        ++pos_;
      } else {
        break;
      }
    }
    // A trailing '.' is the statement terminator, not part of the label.
    while (pos_ > start && line_[pos_ - 1] == '.') --pos_;
    std::string label(line_.substr(start, pos_ - start));
    if (label.empty()) throw LineError{NTriplesErrorKind::InvalidBlankLabel, "empty blank node label"};
    auto it = blanks_.find(label);
    if (it == blanks_.end()) {
      it = blanks_.emplace(label, graph_.freshBlank(label)).first;
    }
    return it->second;
  }

  Term parseLiteral() {
    ++pos_;  // opening quote
    std::string lexical;
    bool closed = false;
    while (pos_ < line_.size()) {
      char c = line_[pos_++];
      if (c == '"') {
        closed = true;
        break;
      }
      if (c == '\\') {
        if (pos_ >= line_.size()) break;
        char e = line_[pos_++];
        switch (e) {
          case '"': lexical.push_back('"'); break;
          case '\\': lexical.push_back('\\'); break;
          case 'n': lexical.push_back('\n'); break;
          case 't': lexical.push_back('\t'); break;
          default:
            throw LineError{NTriplesErrorKind::InvalidEscape,
                            std::string("unsupported escape '\\") + e + "'"};
        }
        continue;
      }
      lexical.push_back(c);
    }
    if (!closed) throw LineError{NTriplesErrorKind::UnterminatedLiteral, "literal is missing its closing quote"};
    if (line_.substr(pos_, 2) == "^^") {
      pos_ += 2;
      if (pos_ >= line_.size() || line_[pos_] != '<') {
        throw LineError{NTriplesErrorKind::UnexpectedToken, "expected datatype IRI after '^^'"};
      }
      return Term::typedLiteral(lexical, parseIri());
    }
    if (pos_ < line_.size() && line_[pos_] == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '-')) {
        ++pos_;
      }
      if (pos_ == start) throw LineError{NTriplesErrorKind::UnexpectedToken, "empty language tag"};
      return Term::langLiteral(lexical, line_.substr(start, pos_ - start));
    }
    return Term::literal(lexical);
  }

  std::string_view line_;
  std::size_t pos_ = 0;
  Graph& graph_;
  std::map<std::string, Term>& blanks_;
};

}  // namespace

NTriplesLoadResult parseNTriples(std::string_view text, Graph& graph) {
  NTriplesLoadResult result;
  std::map<std::string, Term> blanks;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineNo;
    LineParser parser(line, graph, blanks);
    if (!parser.blankOrComment()) {
      try {
        Triple t = parser.parseTriple();
        ++result.triplesRead;
        if (graph.insert(t)) ++result.triplesAdded;
      } catch (const LineError& e) {
        result.errors.push_back({lineNo, e.kind, e.message});
      } catch (const ValidationError& e) {
        result.errors.push_back({lineNo, NTriplesErrorKind::InvalidTriple, e.what()});
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return result;
}

Graph parseNTriples(std::string_view text, std::vector<NTriplesError>* errors) {
  Graph g;
  auto result = parseNTriples(text, g);
  if (errors) *errors = std::move(result.errors);
  return g;
}

std::string serializeNTriples(const Graph& graph) {
  std::string out;
  for (const auto& t : graph.allIds()) {
    out += graph.decode(t.s).toNTriples();
    out.push_back(' ');
    out += graph.decode(t.p).toNTriples();
    out.push_back(' ');
    out += graph.decode(t.o).toNTriples();
    out += " .\n";
  }
  return out;
}

void loadNTriplesFile(const std::string& path, Graph& graph, NTriplesLoadResult* result) {
  auto r = parseNTriples(text::readFile(path), graph);
  if (result) *result = std::move(r);
}

void saveNTriplesFile(const std::string& path, const Graph& graph) {
  text::writeFile(path, serializeNTriples(graph));
}

}  // namespace onokg::kg
