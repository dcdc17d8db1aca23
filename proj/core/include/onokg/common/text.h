#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace onokg::text {

std::string toLower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
bool startsWith(std::string_view s, std::string_view prefix);
bool endsWith(std::string_view s, std::string_view suffix);

// Lowercase slug: alphanumerics kept, every other run collapsed to '-'.
std::string slug(std::string_view s);

// 64-bit FNV-1a; stable across platforms, used for minted identifiers.
std::uint64_t fnv1a(std::string_view s);
std::string hex64(std::uint64_t v);

// Minimal RFC-4180 CSV line splitter (quoted fields, doubled quotes).
std::vector<std::string> parseCsvLine(std::string_view line);
std::string csvEscape(std::string_view field);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // blank lines skipped
  std::vector<std::size_t> lines;              // 1-based source line per row
};

// Reads a CSV file whose first line is a header. Every row must have the
// header's arity; throws ValidationError("<path>:<line>", ...) otherwise.
CsvTable readCsvFile(const std::string& path);

// Reads a whole file; throws IoError naming the path.
std::string readFile(const std::string& path);
void writeFile(const std::string& path, std::string_view content);

}  // namespace onokg::text
