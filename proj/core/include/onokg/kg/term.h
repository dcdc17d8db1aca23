#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace onokg::kg {

enum class TermKind : std::uint8_t { Iri, Literal, Blank };

// An RDF term. Construct through the named factories, which enforce the
// invariants: IRIs are absolute, literals carry at most one of
// {datatype, language}.
class Term {
 public:
  Term() = default;

  static Term iri(std::string_view iri);
  static Term blank(std::string_view label);
  static Term literal(std::string_view lexical);
  static Term typedLiteral(std::string_view lexical, std::string_view datatype);
  static Term langLiteral(std::string_view lexical, std::string_view language);
  static Term integer(long long value);

  TermKind kind() const { return kind_; }
  bool isIri() const { return kind_ == TermKind::Iri; }
  bool isLiteral() const { return kind_ == TermKind::Literal; }
  bool isBlank() const { return kind_ == TermKind::Blank; }

  const std::string& lexical() const { return lexical_; }
  const std::optional<std::string>& datatype() const { return datatype_; }
  const std::optional<std::string>& language() const { return language_; }

  // Numeric value of a literal whose lexical form is a decimal number
  // (plain or xsd-typed numeric). Empty for everything else.
  std::optional<double> numericValue() const;

  // N-Triples rendering: <iri>, _:label, "lex"^^<dt>, "lex"@lang.
  std::string toNTriples() const;

  // Short display form: local name of IRIs, lexical form of literals.
  std::string display() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  TermKind kind_ = TermKind::Iri;
  std::string lexical_;
  std::optional<std::string> datatype_;
  std::optional<std::string> language_;
};

// True when the string has a scheme separator and no characters that the
// N-Triples subset forbids inside angle brackets.
bool isAbsoluteIri(std::string_view iri);

// Part of an IRI after the last '#' or '/'.
std::string_view localName(std::string_view iri);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

// Throws ValidationError naming the offending position.
void validate(const Triple& t);

}  // namespace onokg::kg
