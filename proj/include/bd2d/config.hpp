#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "bd2d/simulation.hpp"

namespace bd2d {

// Parse or validation failure with the offending line and key when known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, std::string key, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line),
        key_(std::move(key)) {}

  int line() const { return line_; }
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

// Line-oriented `key = value` text; `#` starts a comment; unknown keys are
// rejected; missing keys fall back to the ScenarioConfig defaults.
ScenarioConfig parse_config_text(const std::string& text);

ScenarioConfig load_config(const std::filesystem::path& path);

// Canonical text form; parse_config_text(render_config(c)) == c.
std::string render_config(const ScenarioConfig& config);

}  // namespace bd2d
