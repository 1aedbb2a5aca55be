#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hybridwig/sweep.hpp"

namespace hybridwig::cli {

/// Bad flag, bad config-file entry or inapplicable parameter. key() names
/// the offending option without dashes.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// --help was requested; the text is ready to print.
struct HelpRequested {
  std::string text;
};

/// Parses command-line arguments (without the program name). A --config
/// file supplies key=value defaults that explicit flags override.
/// Throws ConfigError or HelpRequested.
SweepConfig parse_config(const std::vector<std::string>& args);

/// key=value text that parse_config reads back to the same SweepConfig.
std::string to_config_text(const SweepConfig& config);

}  // namespace hybridwig::cli
