#include "orlicz/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orlicz/error.hpp"

namespace orlicz {

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty()) throw InvalidArgument(what + ": empty number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE)
    throw InvalidArgument(what + ": not a number: '" + t + "'");
  return v;
}

long parse_long(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty()) throw InvalidArgument(what + ": empty integer");
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size() || errno == ERANGE)
    throw InvalidArgument(what + ": not an integer: '" + t + "'");
  return v;
}

std::optional<double> KindSpec::number(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return parse_double(it->second, kind + " parameter " + key);
}

double KindSpec::number(const std::string& key, double fallback) const {
  return number(key).value_or(fallback);
}

long KindSpec::integer(const std::string& key, long fallback) const {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  return parse_long(it->second, kind + " parameter " + key);
}

KindSpec parse_kind_spec(const std::string& text) {
  KindSpec spec;
  const std::string t = trim(text);
  const auto colon = t.find(':');
  spec.kind = trim(t.substr(0, colon));
  if (spec.kind.empty()) throw InvalidArgument("empty descriptor");
  if (colon == std::string::npos) return spec;
  const bool has_path = spec.kind == "file" || spec.kind == "table";
  auto fields = split(t.substr(colon + 1), ',');
  std::size_t i = 0;
  if (has_path) {
    spec.path = trim(fields[0]);
    if (spec.path.empty()) throw InvalidArgument(spec.kind + ": missing path");
    i = 1;
  }
  for (; i < fields.size(); ++i) {
    const std::string f = trim(fields[i]);
    if (f.empty()) continue;
    const auto eq = f.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument(spec.kind + ": expected key=value, got '" + f + "'");
    const std::string key = trim(f.substr(0, eq));
    if (spec.params.count(key))
      throw InvalidArgument(spec.kind + ": duplicate parameter " + key);
    spec.params[key] = trim(f.substr(eq + 1));
  }
  return spec;
}

ConfigFile ConfigFile::parse(const std::string& text) {
  ConfigFile cfg;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    // strip comments that are not inside quotes
    bool quoted = false;
    std::string body;
    for (char c : raw) {
      if (c == '"') quoted = !quoted;
      if (c == '#' && !quoted) break;
      body.push_back(c);
    }
    if (quoted) throw ConfigError("unterminated quote", line);
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", line);
    const std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key", line);
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    else if (value.find('"') != std::string::npos)
      throw ConfigError("stray quote in value of " + key, line);
    if (cfg.values_.count(key)) throw ConfigError("duplicate key " + key, line);
    cfg.values_[key] = {value, line};
    cfg.order_.push_back(key);
  }
  return cfg;
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<std::string> ConfigFile::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second.first;
}

int ConfigFile::line_of(const std::string& key) const {
  auto it = values_.find(key);
  return it == values_.end() ? 0 : it->second.second;
}

void ConfigFile::set(const std::string& key, const std::string& value) {
  auto it = values_.find(key);
  if (it == values_.end()) {
    values_[key] = {value, 0};
    order_.push_back(key);
  } else {
    it->second = {value, 0};
  }
}

}  // namespace orlicz
