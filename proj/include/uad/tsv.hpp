#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "uad/util.hpp"

namespace uad {

// Minimal TSV access. Rows are split on tabs only; fields keep internal spaces.
// Parse failures report 1-based line numbers.
struct TsvRow {
  std::size_t line_no = 0;
  std::vector<std::string> fields;
};

std::vector<TsvRow> read_tsv(const std::filesystem::path& path, std::size_t expected_fields);

long long parse_int_field(const TsvRow& row, std::size_t index, const std::string& what);
double parse_double_field(const TsvRow& row, std::size_t index, const std::string& what);

}  // namespace uad
