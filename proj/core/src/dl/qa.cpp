#include "onokg/dl/qa.h"

#include <cctype>
#include <regex>
#include <set>

#include "onokg/common/error.h"
#include "onokg/common/text.h"
#include "onokg/dl/expression.h"
#include "onokg/dl/reasoner.h"
#include "onokg/kg/vocab.h"
#include "onokg/ontology/schema.h"

namespace onokg::dl {

using kg::Term;

namespace {

std::vector<std::string> words(std::string_view q) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : q) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-') {
      cur.push_back(c);
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// Cohort code for a question word: the code itself or the first word of the
// cohort's full name.
std::string cohortFor(const kg::Graph& g, const std::string& word) {
  const auto& s = ontology::schema();
  const auto lower = text::toLower(word);
  const Term type = Term::iri(vocab::kRdfType);
  for (const auto& t : g.match(std::nullopt, type, s.cancer)) {
    const auto code = t.subject.display();
    if (word == code) return code;
    for (const auto& n : g.match(t.subject, s.carcinomaType, std::nullopt)) {
      auto first = text::toLower(text::split(n.object.lexical(), ' ').front());
      if (first.size() >= 4 && first == lower) return code;
    }
  }
  return "";
}

bool isBiomarker(const kg::Graph& g, const std::string& symbol) {
  return g.contains({ontology::ono(symbol), Term::iri(vocab::kRdfType), ontology::schema().biomarker});
}

}  // namespace

std::string questionToDlx(const kg::Graph& g, std::string_view question) {
  const auto ws = words(question);

  static const std::regex causedBy(R"(caused\s+by\s+(?:biomarker\s+|gene\s+)?([A-Za-z0-9-]+))",
                                   std::regex::icase);
  std::cmatch m;
  std::string q(question);
  if (std::regex_search(q.c_str(), m, causedBy) && isBiomarker(g, m[1].str())) {
    return "Cancer and inverse causes some " + m[1].str();
  }

  std::vector<std::string> parts{"Biomarker"};
  std::set<std::string> seen;
  auto add = [&](std::string p) {
    if (seen.insert(p).second) parts.push_back(std::move(p));
  };
  for (const auto& w : ws) {
    const auto lw = text::toLower(w);
    if (auto t = ontology::parseGeneType(lw); t || lw == "oncogenes") {
      add("isA only " + std::string(ontology::className(t ? *t : ontology::GeneType::Oncogene)));
      continue;
    }
    if (auto e = ontology::parseEvidence(lw)) {
      add("hasEvidence some " + std::string(ontology::className(*e)));
      continue;
    }
    if (lw == "highly" || lw == "high") {
      add("hasSignificance some High");
      continue;
    }
    if (lw == "medium" || lw == "low") {
      add(std::string("hasSignificance some ") + (lw == "medium" ? "Medium" : "Low"));
      continue;
    }
    if (auto code = cohortFor(g, w); !code.empty()) add("causes some " + code);
  }
  if (parts.size() == 1) {
    throw ValidationError("question", "no query template matches '" + std::string(question) + "'");
  }
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " and " + parts[i];
  return out;
}

QaAnswer answerQuestion(const kg::Graph& g, std::string_view question) {
  QaAnswer a;
  a.expression = questionToDlx(g, question);
  a.answers = instances(g, *parseDlx(a.expression, g));
  return a;
}

}  // namespace onokg::dl
