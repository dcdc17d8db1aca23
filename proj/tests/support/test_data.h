#pragma once

#include <string>
#include <vector>

#include "onokg/kg/graph.h"

namespace onokg::testing {

// Source-tree data directory (seed files, fixtures, query packs).
std::string dataDir();
std::string dataPath(const std::string& relative);

// Built once per process; callers must not mutate.
const kg::Graph& seedGraph();
// Seed plus the hand-planted query fixtures.
const kg::Graph& seedWithFixtures();

}  // namespace onokg::testing

namespace onokg::testing {

struct DlxPackEntry {
  std::string id, question, expression;
};

// Rows of the bundled DL query pack (tab-separated, with header).
std::vector<DlxPackEntry> dlxPack();

}  // namespace onokg::testing
