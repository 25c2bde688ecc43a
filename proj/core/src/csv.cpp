#include "fracnum/csv.hpp"

#include <charconv>

namespace fracnum {

std::string format_double(double v) {
  char buf[40];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const Dataset& data, std::ostream& out) {
  for (std::size_t i = 0; i < data.header.size(); ++i) {
    if (i) out << ',';
    out << data.header[i];
  }
  out << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) out << format_double(*row[i]);
    }
    out << '\n';
  }
}

}  // namespace fracnum
