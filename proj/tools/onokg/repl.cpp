#include <iostream>
#include <string>

#include "app.h"
#include "onokg/common/error.h"
#include "onokg/common/text.h"

namespace onokg::cli {

std::string replHelp() {
  return "commands:\n"
         "  :sparql <query> | :sparql @<file>   evaluate a SPARQL SELECT query\n"
         "  :dlq <class expression>             instances of a class expression\n"
         "  :ask <question>                     answer a question through a class expression\n"
         "  :explain <docid>                    relevance heatmap of a corpus document\n"
         "  :deduce <rule> <instance>           apply a named rule to an instance\n"
         "  :qa                                 quality report of the loaded graph\n"
         "  :check                              ontology pitfall report\n"
         "  :help                               this text\n"
         "  :quit                               leave the session\n";
}

int runRepl(Session& s, std::istream& in, std::ostream& out, bool interactive) {
  std::string line;
  while (true) {
    if (interactive) out << "onokg> " << std::flush;
    if (!std::getline(in, line)) break;
    const std::string trimmed(text::trim(line));
    if (trimmed.empty()) continue;
    s.history().push_back(trimmed);
    const auto space = trimmed.find_first_of(" \t");
    const std::string cmd = trimmed.substr(0, space);
    const std::string arg = space == std::string::npos ? "" : std::string(text::trim(trimmed.substr(space + 1)));
    try {
      if (cmd == ":quit" || cmd == ":q") {
        return 0;
      } else if (cmd == ":sparql") {
        if (!arg.empty() && arg.front() == '@') {
          cmdQuery(s, arg.substr(1), Format::Table, out);
        } else {
          cmdQueryText(s, arg, Format::Table, out);
        }
      } else if (cmd == ":dlq") {
        cmdDlq(s, arg, Format::Table, out);
      } else if (cmd == ":ask") {
        cmdAsk(s, arg, Format::Table, out);
      } else if (cmd == ":explain") {
        if (arg.empty()) throw ValidationError(":explain", "expected a document id");
        ExplainOptions o;
        o.colour = interactive;
        cmdExplain(s, arg, "", o, Format::Table, out);
      } else if (cmd == ":deduce") {
        const auto parts = text::split(arg, ' ');
        if (parts.size() != 2) throw ValidationError(":deduce", "expected a rule name and an instance");
        cmdDeduce(s, parts[0], parts[1], false, out);
      } else if (cmd == ":qa") {
        cmdQa(s, Format::Table, out);
      } else if (cmd == ":check") {
        cmdCheck(s, Format::Table, out);
      } else {
        if (cmd != ":help") out << "unknown command '" << cmd << "'\n";
        out << replHelp();
      }
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace onokg::cli
