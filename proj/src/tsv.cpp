#include "uad/tsv.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

namespace uad {

std::vector<TsvRow> read_tsv(const std::filesystem::path& path, std::size_t expected_fields) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path.string());
  std::vector<TsvRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    TsvRow row;
    row.line_no = line_no;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        row.fields.push_back(line.substr(start));
        break;
      }
      row.fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (expected_fields != 0 && row.fields.size() != expected_fields) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(expected_fields) + " fields, got " +
                      std::to_string(row.fields.size()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

long long parse_int_field(const TsvRow& row, std::size_t index, const std::string& what) {
  const std::string& s = row.fields.at(index);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DataError("line " + std::to_string(row.line_no) + ": bad " + what + ": '" + s + "'");
  }
  return value;
}

double parse_double_field(const TsvRow& row, std::size_t index, const std::string& what) {
  const std::string& s = row.fields.at(index);
  char* end = nullptr;
  double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    throw DataError("line " + std::to_string(row.line_no) + ": bad " + what + ": '" + s + "'");
  }
  return value;
}

}  // namespace uad
