#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fracnum {

// 17-significant-digit, locale-independent rendering ('.' decimal point),
// identical bytes for identical doubles on every run.
std::string format_double(double v);

// A tabular dataset: header row plus rows of optional cells. An empty cell
// marks a point an engine rejected; the note explains it.
struct Dataset {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
  std::vector<std::string> cell_notes;
};

// RFC-4180-style CSV: header, '\n' line endings, no quoting (values never
// contain separators).
void write_csv(const Dataset& data, std::ostream& out);

}  // namespace fracnum
