#include "bd2d/config.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "bd2d/csv.hpp"

namespace bd2d {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& v, int line, const std::string& key) {
  std::size_t pos = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(line, key, "key '" + key + "': not a number: '" + v + "'");
  }
  if (pos != v.size()) {
    throw ConfigError(line, key, "key '" + key + "': not a number: '" + v + "'");
  }
  return parsed;
}

long long parse_int(const std::string& v, int line, const std::string& key) {
  std::size_t pos = 0;
  long long parsed = 0;
  try {
    parsed = std::stoll(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(line, key,
                      "key '" + key + "': not an integer: '" + v + "'");
  }
  if (pos != v.size()) {
    throw ConfigError(line, key,
                      "key '" + key + "': not an integer: '" + v + "'");
  }
  return parsed;
}

std::uint64_t parse_seed(const std::string& v, int line,
                         const std::string& key) {
  std::size_t pos = 0;
  unsigned long long parsed = 0;
  try {
    parsed = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(line, key, "key '" + key + "': not a seed: '" + v + "'");
  }
  if (pos != v.size() || v.front() == '-') {
    throw ConfigError(line, key, "key '" + key + "': not a seed: '" + v + "'");
  }
  return parsed;
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(line, key,
                    "key '" + key + "': expected true or false, got '" + v + "'");
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text) {
  ScenarioConfig cfg;

  using Setter = std::function<void(const std::string&, int)>;
  const std::map<std::string, Setter> setters = {
      {"area_width_m",
       [&](const std::string& v, int ln) { cfg.area_width_m = parse_double(v, ln, "area_width_m"); }},
      {"area_height_m",
       [&](const std::string& v, int ln) { cfg.area_height_m = parse_double(v, ln, "area_height_m"); }},
      {"n_nodes",
       [&](const std::string& v, int ln) { cfg.n_nodes = static_cast<int>(parse_int(v, ln, "n_nodes")); }},
      {"epsilon_max",
       [&](const std::string& v, int ln) { cfg.epsilon_max = parse_double(v, ln, "epsilon_max"); }},
      {"min_bsn",
       [&](const std::string& v, int ln) { cfg.min_bsn = static_cast<int>(parse_int(v, ln, "min_bsn")); }},
      {"catalog_size",
       [&](const std::string& v, int ln) { cfg.catalog_size = static_cast<int>(parse_int(v, ln, "catalog_size")); }},
      {"beta_pop",
       [&](const std::string& v, int ln) { cfg.beta_pop = parse_double(v, ln, "beta_pop"); }},
      {"beta_req",
       [&](const std::string& v, int ln) { cfg.beta_req = parse_double(v, ln, "beta_req"); }},
      {"segment_s",
       [&](const std::string& v, int ln) { cfg.segment_s = parse_double(v, ln, "segment_s"); }},
      {"cache_capacity_s",
       [&](const std::string& v, int ln) { cfg.cache_capacity_s = parse_double(v, ln, "cache_capacity_s"); }},
      {"policy",
       [&](const std::string& v, int ln) {
         try {
           cfg.policy = parse_policy(v);
         } catch (const std::invalid_argument& e) {
           throw ConfigError(ln, "policy", std::string("key 'policy': ") + e.what());
         }
       }},
      {"replications",
       [&](const std::string& v, int ln) { cfg.replications = static_cast<int>(parse_int(v, ln, "replications")); }},
      {"base_seed",
       [&](const std::string& v, int ln) { cfg.base_seed = parse_seed(v, ln, "base_seed"); }},
      {"enforce_same_cluster",
       [&](const std::string& v, int ln) { cfg.enforce_same_cluster = parse_bool(v, ln, "enforce_same_cluster"); }},
  };

  std::map<std::string, int> seen;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_no, "", "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(line_no, "", "missing key before '='");
    }
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw ConfigError(line_no, key, "unknown key '" + key + "'");
    }
    if (const auto prev = seen.find(key); prev != seen.end()) {
      throw ConfigError(line_no, key,
                        "duplicate key '" + key + "' (first set on line " +
                            std::to_string(prev->second) + ")");
    }
    seen.emplace(key, line_no);
    if (value.empty()) {
      throw ConfigError(line_no, key, "key '" + key + "': missing value");
    }
    it->second(value, line_no);
  }

  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(0, "", e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(0, "", "cannot open config file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

std::string render_config(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "area_width_m = " << format_double(c.area_width_m) << '\n'
      << "area_height_m = " << format_double(c.area_height_m) << '\n'
      << "n_nodes = " << c.n_nodes << '\n'
      << "epsilon_max = " << format_double(c.epsilon_max) << '\n'
      << "min_bsn = " << c.min_bsn << '\n'
      << "catalog_size = " << c.catalog_size << '\n'
      << "beta_pop = " << format_double(c.beta_pop) << '\n'
      << "beta_req = " << format_double(c.beta_req) << '\n'
      << "segment_s = " << format_double(c.segment_s) << '\n'
      << "cache_capacity_s = " << format_double(c.cache_capacity_s) << '\n'
      << "policy = " << to_string(c.policy) << '\n'
      << "replications = " << c.replications << '\n'
      << "base_seed = " << c.base_seed << '\n'
      << "enforce_same_cluster = " << (c.enforce_same_cluster ? "true" : "false")
      << '\n';
  return out.str();
}

}  // namespace bd2d
