#pragma once

#include "hecke/root_datum.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <set>
#include <string>

namespace hecke {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatumConfig {
  BasedRootDatum datum;
  std::optional<Cocharacter> mu;
  std::optional<int> reflex_degree;  // optional "n"; checked, never trusted
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

inline int bracket_depth(const std::string& s) {
  int depth = 0;
  bool in_string = false;
  for (char c : s) {
    if (c == '"') in_string = !in_string;
    if (in_string) continue;
    if (c == '[' || c == '{') ++depth;
    if (c == ']' || c == '}') --depth;
  }
  return depth;
}

struct RawEntry {
  nlohmann::json value;
  int line = 0;
};

[[noreturn]] inline void config_fail(int line, const std::string& field,
                                     const std::string& msg) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "";
  if (!field.empty()) where += "field '" + field + "': ";
  throw ConfigError(where + msg);
}

inline std::vector<std::int64_t> int_list(const RawEntry& e, const std::string& field) {
  if (!e.value.is_array()) config_fail(e.line, field, "expected a list of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : e.value) {
    if (!v.is_number_integer()) config_fail(e.line, field, "expected integer entries, got " + v.dump());
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

inline std::vector<std::vector<std::int64_t>> int_matrix(const RawEntry& e,
                                                         const std::string& field,
                                                         std::size_t width) {
  if (!e.value.is_array()) config_fail(e.line, field, "expected a list of integer lists");
  std::vector<std::vector<std::int64_t>> out;
  std::size_t row = 0;
  for (const auto& r : e.value) {
    ++row;
    RawEntry sub{r, e.line};
    auto v = int_list(sub, field);
    if (v.size() != width)
      config_fail(e.line, field,
                  "entry " + std::to_string(row) + " has length " + std::to_string(v.size()) +
                      ", expected rank " + std::to_string(width));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

/// Parses `key = <JSON value>` lines; `#` starts a comment; arrays may span lines.
inline DatumConfig parse_config(const std::string& text) {
  using namespace detail;
  std::map<std::string, RawEntry> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) config_fail(lineno, "", "expected 'key = value'");
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    const int start = lineno;
    while (bracket_depth(value) > 0 && std::getline(in, line)) {
      ++lineno;
      value += " " + trim(strip_comment(line));
    }
    if (bracket_depth(value) != 0) config_fail(start, key, "unbalanced brackets");
    if (key.empty()) config_fail(start, "", "missing key");
    if (entries.count(key)) config_fail(start, key, "duplicate field");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(value);
    } catch (const nlohmann::json::parse_error&) {
      config_fail(start, key, "malformed value '" + value + "'");
    }
    entries[key] = RawEntry{j, start};
  }

  static const std::set<std::string> known = {"rank", "simple_roots", "simple_coroots",
                                              "sigma", "mu", "name", "n"};
  for (const auto& [k, e] : entries)
    if (!known.count(k)) config_fail(e.line, k, "unknown field");

  auto require = [&](const std::string& k) -> const RawEntry& {
    auto it = entries.find(k);
    if (it == entries.end()) config_fail(0, k, "missing required field");
    return it->second;
  };

  DatumConfig cfg;
  const auto& r = require("rank");
  if (!r.value.is_number_integer() || r.value.get<std::int64_t>() <= 0)
    config_fail(r.line, "rank", "expected a positive integer");
  const auto n = static_cast<std::size_t>(r.value.get<std::int64_t>());
  cfg.datum.rank = n;
  for (auto& row : int_matrix(require("simple_roots"), "simple_roots", n))
    cfg.datum.simple_roots.emplace_back(std::move(row));
  for (auto& row : int_matrix(require("simple_coroots"), "simple_coroots", n))
    cfg.datum.simple_coroots.emplace_back(std::move(row));
  if (auto it = entries.find("sigma"); it != entries.end()) {
    auto rows = int_matrix(it->second, "sigma", n);
    if (rows.size() != n)
      config_fail(it->second.line, "sigma",
                  "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
    cfg.datum.sigma = IntMatrix::from_rows(rows);
  } else {
    cfg.datum.sigma = IntMatrix::identity(n);
  }
  if (auto it = entries.find("mu"); it != entries.end()) {
    auto v = int_list(it->second, "mu");
    if (v.size() != n)
      config_fail(it->second.line, "mu",
                  "has length " + std::to_string(v.size()) + ", expected rank " + std::to_string(n));
    cfg.mu = Cocharacter(std::move(v));
  }
  if (auto it = entries.find("name"); it != entries.end()) {
    if (!it->second.value.is_string()) config_fail(it->second.line, "name", "expected a string");
    cfg.datum.name = it->second.value.get<std::string>();
  }
  if (auto it = entries.find("n"); it != entries.end()) {
    if (!it->second.value.is_number_integer() || it->second.value.get<std::int64_t>() <= 0)
      config_fail(it->second.line, "n", "expected a positive integer");
    cfg.reflex_degree = it->second.value.get<int>();
  }
  return cfg;
}

inline DatumConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

/// Comma-separated integers, optionally wrapped in brackets or parentheses.
inline Cocharacter parse_cocharacter(std::string s) {
  for (char& c : s)
    if (c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::vector<std::int64_t> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = detail::trim(item);
    if (item.empty()) throw std::invalid_argument("empty entry in cocharacter");
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw std::invalid_argument("malformed integer '" + item + "'");
    v.push_back(x);
  }
  return Cocharacter(std::move(v));
}

}  // namespace hecke
