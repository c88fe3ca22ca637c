#ifndef ORLICZ_CONFIG_HPP
#define ORLICZ_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orlicz {

/// A parsed "kind:key=value,key=value" descriptor, as used for Young
/// functions, weights and grid functions. For "file:" and "table:" kinds the
/// first comma-separated field is the path and is kept in `path`.
struct KindSpec {
  std::string kind;
  std::string path;
  std::map<std::string, std::string> params;

  double number(const std::string& key, double fallback) const;
  std::optional<double> number(const std::string& key) const;
  long integer(const std::string& key, long fallback) const;
};

KindSpec parse_kind_spec(const std::string& text);

/// Flat key = value configuration file. `#` starts a comment; values may be
/// double-quoted. Duplicate keys are an error.
class ConfigFile {
public:
  static ConfigFile parse(const std::string& text);
  static ConfigFile load(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> get(const std::string& key) const;
  int line_of(const std::string& key) const;
  /// Keys in file order.
  const std::vector<std::string>& keys() const { return order_; }
  void set(const std::string& key, const std::string& value);

private:
  std::map<std::string, std::pair<std::string, int>> values_;
  std::vector<std::string> order_;
};

double parse_double(const std::string& text, const std::string& what);
long parse_long(const std::string& text, const std::string& what);
std::vector<std::string> split(const std::string& text, char sep);
std::string trim(const std::string& text);

}  // namespace orlicz

#endif
