#include "onokg/kg/term.h"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "onokg/common/error.h"
#include "onokg/kg/vocab.h"

namespace onokg::kg {

namespace {

bool isValidBlankLabel(std::string_view label) {
  if (label.empty() || label.back() == '.') return false;
  for (char c : label) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_' || c == '-' || c == '.' || u >= 0x80)) {
      return false;
    }
  }
  return true;
}

bool isNumericDatatype(std::string_view dt) {
  if (dt.substr(0, vocab::kXsd.size()) != vocab::kXsd) return false;
  auto local = dt.substr(vocab::kXsd.size());
  return local == "integer" || local == "decimal" || local == "double" ||
         local == "float" || local == "int" || local == "long" ||
         local == "short" || local == "nonNegativeInteger" ||
         local == "positiveInteger" || local == "negativeInteger" ||
         local == "nonPositiveInteger";
}

}  // namespace

bool isAbsoluteIri(std::string_view iri) {
  auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    auto c = static_cast<unsigned char>(iri[i]);
    if (!(std::isalnum(c) || c == '+' || c == '-' || c == '.')) return false;
  }
  for (char c : iri) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' ||
        c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
      return false;
    }
  }
  return true;
}

std::string_view localName(std::string_view iri) {
  auto pos = iri.find_last_of("#/");
  if (pos == std::string_view::npos) {
    auto colon = iri.find(':');
    return colon == std::string_view::npos ? iri : iri.substr(colon + 1);
  }
  return iri.substr(pos + 1);
}

Term Term::iri(std::string_view iri) {
  if (!isAbsoluteIri(iri)) {
    throw ValidationError("iri", "not an absolute IRI: '" + std::string(iri) + "'");
  }
  Term t;
  t.kind_ = TermKind::Iri;
  t.lexical_ = std::string(iri);
  return t;
}

Term Term::blank(std::string_view label) {
  if (!isValidBlankLabel(label)) {
    throw ValidationError("blank", "invalid blank node label '" + std::string(label) + "'");
  }
  Term t;
  t.kind_ = TermKind::Blank;
  t.lexical_ = std::string(label);
  return t;
}

Term Term::literal(std::string_view lexical) {
  Term t;
  t.kind_ = TermKind::Literal;
  t.lexical_ = std::string(lexical);
  return t;
}

Term Term::typedLiteral(std::string_view lexical, std::string_view datatype) {
  if (!isAbsoluteIri(datatype)) {
    throw ValidationError("datatype", "not an absolute IRI: '" + std::string(datatype) + "'");
  }
  Term t = literal(lexical);
  t.datatype_ = std::string(datatype);
  return t;
}

Term Term::langLiteral(std::string_view lexical, std::string_view language) {
  if (language.empty()) throw ValidationError("language", "empty language tag");
  for (char c : language) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-')) {
      throw ValidationError("language", "invalid language tag '" + std::string(language) + "'");
    }
  }
  Term t = literal(lexical);
  t.language_ = std::string(language);
  return t;
}

Term Term::integer(long long value) {
  return typedLiteral(std::to_string(value), vocab::kXsdInteger);
}

std::optional<double> Term::numericValue() const {
  if (kind_ != TermKind::Literal || !datatype_ || !isNumericDatatype(*datatype_)) {
    return std::nullopt;
  }
  const std::string& s = lexical_;
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::string Term::toNTriples() const {
  switch (kind_) {
    case TermKind::Iri:
      return "<" + lexical_ + ">";
    case TermKind::Blank:
      return "_:" + lexical_;
    case TermKind::Literal: {
      std::string out = "\"";
      for (char c : lexical_) {
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\t': out += "\\t"; break;
          default: out.push_back(c);
        }
      }
      out.push_back('"');
      if (datatype_) out += "^^<" + *datatype_ + ">";
      if (language_) out += "@" + *language_;
      return out;
    }
  }
  return {};
}

std::string Term::display() const {
  if (kind_ == TermKind::Iri) return std::string(localName(lexical_));
  if (kind_ == TermKind::Blank) return "_:" + lexical_;
  return lexical_;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.lexical());
  h ^= static_cast<std::size_t>(t.kind()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  if (t.datatype()) h ^= std::hash<std::string>{}(*t.datatype()) * 31;
  if (t.language()) h ^= std::hash<std::string>{}(*t.language()) * 131;
  return h;
}

void validate(const Triple& t) {
  if (t.subject.isLiteral()) {
    throw ValidationError("subject", "a literal cannot be a subject");
  }
  if (!t.predicate.isIri()) {
    throw ValidationError("predicate", "the predicate must be an IRI");
  }
}

}  // namespace onokg::kg
