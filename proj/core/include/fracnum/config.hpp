#pragma once

#include <istream>
#include <map>
#include <string>

namespace fracnum {

// key=value settings file ('#' comments, blank lines ignored) overriding
// tolerances and default grids. All values are numeric.
class Config {
 public:
  static Config parse(std::istream& in);
  static Config parse_file(const std::string& path);

  double get(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool has(const std::string& key) const;

 private:
  std::map<std::string, double> values_;
};

}  // namespace fracnum
