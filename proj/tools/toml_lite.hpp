// Copyright 2026 The qfcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Minimal TOML reader covering the configuration schema of this project:
// [section] tables, key = value pairs with booleans, numbers, basic strings
// and flat arrays. Not a general TOML implementation.

#ifndef QFCS_TOOLS_TOML_LITE_HPP
#define QFCS_TOOLS_TOML_LITE_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfcs_cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConfigValue {
  enum class Kind { kBool, kNumber, kString, kNumberArray, kStringArray };
  Kind kind = Kind::kNumber;
  bool boolean = false;
  double number = 0.0;
  std::string text;
  std::vector<double> numbers;
  std::vector<std::string> texts;
};

// section -> key -> value
using ConfigTable = std::map<std::string, std::map<std::string, ConfigValue>>;

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (c == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

inline std::string parse_basic_string(const std::string& raw, int lineno) {
  if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"') {
    throw ConfigError("line " + std::to_string(lineno) + ": malformed string " + raw);
  }
  std::string out;
  for (size_t i = 1; i + 1 < raw.size(); ++i) {
    if (raw[i] == '\\' && i + 2 < raw.size()) {
      ++i;
      switch (raw[i]) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        default:
          throw ConfigError("line " + std::to_string(lineno) + ": unsupported escape");
      }
    } else {
      out.push_back(raw[i]);
    }
  }
  return out;
}

inline double parse_number(const std::string& raw, int lineno) {
  try {
    size_t used = 0;
    const double v = std::stod(raw, &used);
    if (used != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(lineno) + ": expected a number, got '" + raw + "'");
  }
}

inline std::vector<std::string> split_array_items(const std::string& body, int lineno) {
  std::vector<std::string> items;
  std::string cur;
  bool in_string = false;
  for (size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == '"' && (i == 0 || body[i - 1] != '\\')) in_string = !in_string;
    if (c == ',' && !in_string) {
      items.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  const std::string last = trim(cur);
  if (!last.empty()) items.push_back(last);
  if (in_string) throw ConfigError("line " + std::to_string(lineno) + ": unterminated string");
  return items;
}

inline ConfigValue parse_value(const std::string& raw, int lineno) {
  ConfigValue v;
  if (raw == "true" || raw == "false") {
    v.kind = ConfigValue::Kind::kBool;
    v.boolean = raw == "true";
    return v;
  }
  if (!raw.empty() && raw.front() == '"') {
    v.kind = ConfigValue::Kind::kString;
    v.text = parse_basic_string(raw, lineno);
    return v;
  }
  if (!raw.empty() && raw.front() == '[') {
    if (raw.back() != ']') {
      throw ConfigError("line " + std::to_string(lineno) + ": unterminated array");
    }
    const auto items = split_array_items(raw.substr(1, raw.size() - 2), lineno);
    const bool strings = !items.empty() && items.front().front() == '"';
    v.kind = strings ? ConfigValue::Kind::kStringArray : ConfigValue::Kind::kNumberArray;
    for (const auto& item : items) {
      if (strings) {
        v.texts.push_back(parse_basic_string(item, lineno));
      } else {
        v.numbers.push_back(parse_number(item, lineno));
      }
    }
    return v;
  }
  v.kind = ConfigValue::Kind::kNumber;
  v.number = parse_number(raw, lineno);
  return v;
}

}  // namespace detail

inline ConfigTable parse_toml(const std::string& text) {
  ConfigTable table;
  std::string section;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    const std::string raw =
        text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    const std::string line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(lineno) + ": malformed table header");
      }
      section = detail::trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw ConfigError("line " + std::to_string(lineno) + ": empty table name");
      }
      table[section];
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    table[section][key] = detail::parse_value(value, lineno);
  }
  return table;
}

}  // namespace qfcs_cli

#endif  // QFCS_TOOLS_TOML_LITE_HPP
