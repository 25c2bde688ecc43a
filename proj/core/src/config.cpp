#include "fracnum/config.hpp"

#include <cstdlib>
#include <fstream>

#include "fracnum/errors.hpp"

namespace fracnum {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Config Config::parse(std::istream& in) {
  Config cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config: line " + std::to_string(line_no) +
                        " is not key=value: '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw DomainError("config: empty key or value on line " +
                        std::to_string(line_no));
    }
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size()) {
      throw DomainError("config: non-numeric value '" + value + "' for key '" +
                        key + "'");
    }
    cfg.values_[key] = parsed;
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("config: cannot open '" + path + "'");
  }
  return parse(in);
}

double Config::get(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

int Config::get_int(const std::string& key, int fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : static_cast<int>(it->second);
}

bool Config::has(const std::string& key) const {
  return values_.count(key) != 0;
}

}  // namespace fracnum
