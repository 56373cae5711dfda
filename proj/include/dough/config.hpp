#pragma once

#include <map>
#include <string>

#include "dough/control_loop.hpp"

namespace dough {

// Flat declarative key/value document: `key = value` lines, `# comments`,
// `[section]` headers flattening to "section.key". Values: bare numbers,
// booleans, and "quoted strings".
struct ConfigDoc {
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) != 0; }
  std::string get_str(const std::string& key) const;
  std::string get_str(const std::string& key, const std::string& fallback) const;
  double get_num(const std::string& key) const;
  double get_num(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
};

ConfigDoc parse_config_text(const std::string& text);
ConfigDoc load_config(const std::string& path);

StartMethod parse_start_method(const std::string& s);
EndMethod parse_end_method(const std::string& s);
ShrinkMode parse_shrink_mode(const std::string& s);

// Build a RunConfig from a parsed document; unknown materials and malformed
// enum values raise InvalidConfig.
RunConfig run_config_from(const ConfigDoc& doc);

// Versioned preset file ([material.<name>] tables, version = 1).
std::map<std::string, MaterialParams> load_materials(const std::string& path);

}  // namespace dough
