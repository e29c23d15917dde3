#include "gems/csv.hpp"

#include <fstream>
#include <sstream>

#include "gems/error.hpp"

namespace gems {

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MalformedCsv, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), path);
}

CsvTable parse_csv(const std::string& text, const std::string& origin) {
  CsvTable table;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool record_has_data = false;
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(field);
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (table.header.empty()) {
      table.header = record;
    } else {
      if (record.size() != table.header.size()) {
        fail(Errc::MalformedCsv, origin + ":" + std::to_string(line) + ": expected " +
                                     std::to_string(table.header.size()) + " fields, got " +
                                     std::to_string(record.size()));
      }
      table.rows.push_back(record);
    }
    record.clear();
    record_has_data = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      record_has_data = true;
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        record_has_data = true;
        break;
      case ',':
        end_field();
        record_has_data = true;
        break;
      case '\r':
        break;  // handled with the following '\n'
      case '\n':
        if (record_has_data || !record.empty() || !field.empty()) end_record();
        ++line;
        break;
      default:
        field.push_back(c);
        record_has_data = true;
        break;
    }
  }
  if (in_quotes) fail(Errc::MalformedCsv, origin + ": unterminated quoted field");
  if (record_has_data || !record.empty() || !field.empty()) end_record();

  if (table.header.empty()) fail(Errc::MalformedCsv, origin + ": missing header row");
  return table;
}

std::string csv_quote(const std::string& field) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace gems
