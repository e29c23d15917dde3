#pragma once

#include <string>
#include <vector>

namespace gems {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; -1 when absent.
  int column(const std::string& name) const;
};

// RFC 4180 parser: quoted fields, doubled quotes, embedded commas/newlines.
// A header row is required. Throws MalformedCsv with file/line context.
CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text, const std::string& origin);

// Quotes a field iff it contains a comma, quote, or newline.
std::string csv_quote(const std::string& field);

}  // namespace gems
